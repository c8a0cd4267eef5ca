#include "qreg/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qreg {

QSeries::QSeries(int trunc) : trunc_(trunc) {
	if (trunc < 0) throw std::invalid_argument("QSeries: negative truncation order");
	coeffs_.resize(trunc + 1);
}

QSeries::QSeries(std::vector<mpz_class> coeffs, int trunc) : trunc_(trunc), coeffs_(std::move(coeffs)) {
	if (trunc < 0) throw std::invalid_argument("QSeries: negative truncation order");
	coeffs_.resize(trunc + 1);
}

QSeries QSeries::one(int trunc) {
	QSeries s(trunc);
	s.coeffs_[0] = 1;
	return s;
}

const mpz_class& QSeries::coeff(int exp) const {
	if (exp < 0 || exp > trunc_)
		throw std::out_of_range("QSeries::coeff: exponent beyond truncation order");
	return coeffs_[exp];
}

void QSeries::add_at(int exp, const mpz_class& value) {
	if (exp < 0 || exp > trunc_)
		throw std::out_of_range("QSeries::add_at: exponent beyond truncation order");
	coeffs_[exp] += value;
}

QSeries QSeries::truncated(int t) const {
	if (t > trunc_) throw std::invalid_argument("QSeries::truncated: cannot extend truncation");
	std::vector<mpz_class> c(coeffs_.begin(), coeffs_.begin() + t + 1);
	return QSeries(std::move(c), t);
}

QSeries& QSeries::operator+=(const QSeries& r) {
	int t = std::min(trunc_, r.trunc_);
	coeffs_.resize(t + 1);
	trunc_ = t;
	for (int i = 0; i <= t; ++i) coeffs_[i] += r.coeffs_[i];
	return *this;
}

QSeries& QSeries::operator-=(const QSeries& r) {
	int t = std::min(trunc_, r.trunc_);
	coeffs_.resize(t + 1);
	trunc_ = t;
	for (int i = 0; i <= t; ++i) coeffs_[i] -= r.coeffs_[i];
	return *this;
}

QSeries QSeries::operator-() const {
	QSeries out = *this;
	for (auto& c : out.coeffs_) c = -c;
	return out;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
	int t = std::min(a.trunc_, b.trunc_);
	QSeries out(t);
	for (int i = 0; i <= t; ++i) {
		if (a.coeffs_[i] == 0) continue;
		for (int j = 0; i + j <= t; ++j) {
			if (b.coeffs_[j] == 0) continue;
			out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
		}
	}
	return out;
}

QSeries series_from_poly(const IntPoly& p, int trunc) {
	QSeries out(trunc);
	int top = std::min(trunc, p.degree());
	for (int i = 0; i <= top; ++i) out.add_at(i, p.coeff(i));
	return out;
}

QSeries series_recip(const QSeries& s) {
	const mpz_class& c0 = s.coeff(0);
	if (c0 != 1 && c0 != -1)
		throw std::domain_error("series_recip: constant coefficient must be +1 or -1");

	/* With s = sum a_n q^n and t = 1/s = sum b_n q^n, matching coefficients
	 * of s*t = 1 gives b_0 = 1/a_0 and b_n = -(1/a_0) sum_{j=1}^{n} a_j b_{n-j}
	 * for n >= 1; 1/a_0 = a_0 because a_0 is a unit. */
	QSeries out(s.trunc());
	out.add_at(0, c0);
	for (int n = 1; n <= s.trunc(); ++n) {
		mpz_class acc = 0;
		for (int j = 1; j <= n; ++j) acc += s.coeff(j) * out.coeff(n - j);
		out.add_at(n, -c0 * acc);
	}
	return out;
}

}  // namespace qreg
