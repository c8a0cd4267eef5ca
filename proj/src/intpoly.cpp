#include "qreg/intpoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace qreg {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
	normalize();
}

IntPoly IntPoly::one() {
	return IntPoly({mpz_class(1)});
}

IntPoly IntPoly::monomial(mpz_class coeff, int exp) {
	if (exp < 0) throw std::invalid_argument("monomial: negative exponent");
	if (coeff == 0) return IntPoly();
	std::vector<mpz_class> c(exp + 1);
	c[exp] = std::move(coeff);
	return IntPoly(std::move(c));
}

const mpz_class& IntPoly::coeff(int exp) const {
	if (exp < 0 || exp >= static_cast<int>(coeffs_.size())) return kZero;
	return coeffs_[exp];
}

mpz_class IntPoly::eval_at_one() const {
	mpz_class s = 0;
	for (const auto& c : coeffs_) s += c;
	return s;
}

void IntPoly::normalize() {
	while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& r) {
	if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size());
	for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] += r.coeffs_[i];
	normalize();
	return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& r) {
	if (coeffs_.size() < r.coeffs_.size()) coeffs_.resize(r.coeffs_.size());
	for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[i] -= r.coeffs_[i];
	normalize();
	return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
	if (a.is_zero() || b.is_zero()) return IntPoly();
	std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
	for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
		if (a.coeffs_[i] == 0) continue;
		for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
			if (b.coeffs_[j] == 0) continue;
			c[i + j] += a.coeffs_[i] * b.coeffs_[j];
		}
	}
	return IntPoly(std::move(c));
}

IntPoly& IntPoly::operator*=(const IntPoly& r) {
	*this = *this * r;
	return *this;
}

IntPoly IntPoly::operator-() const {
	IntPoly out = *this;
	for (auto& c : out.coeffs_) c = -c;
	return out;
}

IntPoly IntPoly::shifted(int k) const {
	if (k < 0) throw std::invalid_argument("shifted: negative shift");
	if (is_zero() || k == 0) return *this;
	std::vector<mpz_class> c(coeffs_.size() + k);
	for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + k] = coeffs_[i];
	return IntPoly(std::move(c));
}

IntPoly IntPoly::pow(int e) const {
	if (e < 0) throw std::invalid_argument("pow: negative exponent");
	IntPoly out = IntPoly::one();
	for (int i = 0; i < e; ++i) out *= *this;
	return out;
}

std::string IntPoly::str() const {
	if (is_zero()) return "0";
	std::ostringstream os;
	bool first = true;
	for (int e = 0; e <= degree(); ++e) {
		const mpz_class& c = coeffs_[e];
		if (c == 0) continue;
		if (first) {
			if (c < 0) os << "-";
			first = false;
		} else {
			os << (c < 0 ? " - " : " + ");
		}
		mpz_class a = abs(c);
		if (a != 1 || e == 0) os << a.get_str();
		if (e == 1) os << "q";
		else if (e > 1) os << "q^" << e;
	}
	return os.str();
}

IntPoly q_int(int n) {
	if (n < 0) throw std::invalid_argument("q_int: negative n");
	std::vector<mpz_class> c(n, mpz_class(1));
	return IntPoly(std::move(c));
}

IntPoly q_factorial(int n) {
	if (n < 0) throw std::invalid_argument("q_factorial: negative n");
	IntPoly out = IntPoly::one();
	for (int j = 1; j <= n; ++j) out *= q_int(j);
	return out;
}

IntPoly q_binomial(int n, int k) {
	if (n < 0) throw std::invalid_argument("q_binomial: negative n");
	if (k < 0 || k > n) return IntPoly();
	k = std::min(k, n - k);
	/* Row-by-row q-Pascal fill: [i choose j]_q
	 * = [i-1 choose j-1]_q + q^j [i-1 choose j]_q. */
	std::vector<IntPoly> row(k + 1);
	row[0] = IntPoly::one();
	for (int i = 1; i <= n; ++i) {
		for (int j = std::min(i, k); j >= 1; --j) {
			row[j] = row[j - 1] + row[j].shifted(j);
		}
	}
	return row[k];
}

IntPoly poch_general(int first, int step, int n, bool plus) {
	if (n < 0) throw std::invalid_argument("poch_general: negative n");
	IntPoly out = IntPoly::one();
	for (int j = 0; j < n; ++j) {
		int e = first + j * step;
		out *= IntPoly::one() + IntPoly::monomial(plus ? 1 : -1, e);
	}
	return out;
}

IntPoly poch_finite(int n) {
	return poch_general(1, 1, n);
}

}  // namespace qreg
