#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qreg {

/* Dense polynomial in q with arbitrary-precision integer coefficients.
 * coeffs()[e] is the coefficient of q^e.  The representation is kept
 * normalized: no trailing zero coefficients, and the zero polynomial is the
 * empty vector, so operator== is structural equality. */
class IntPoly {
public:
	IntPoly() = default;
	explicit IntPoly(std::vector<mpz_class> coeffs);

	static IntPoly zero() { return IntPoly(); }
	static IntPoly one();
	static IntPoly monomial(mpz_class coeff, int exp);

	bool is_zero() const { return coeffs_.empty(); }
	/* Degree of the zero polynomial is -1. */
	int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
	const mpz_class& coeff(int exp) const;
	const std::vector<mpz_class>& coeffs() const { return coeffs_; }

	/* Sum of all coefficients, i.e. the value at q = 1. */
	mpz_class eval_at_one() const;

	IntPoly& operator+=(const IntPoly& r);
	IntPoly& operator-=(const IntPoly& r);
	IntPoly& operator*=(const IntPoly& r);
	IntPoly operator-() const;

	/* Multiplication by q^k, k >= 0. */
	IntPoly shifted(int k) const;
	IntPoly pow(int e) const;

	friend IntPoly operator+(IntPoly a, const IntPoly& b) { a += b; return a; }
	friend IntPoly operator-(IntPoly a, const IntPoly& b) { a -= b; return a; }
	friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
	friend bool operator==(const IntPoly&, const IntPoly&) = default;

	/* Human-readable form, lowest exponent first: "1 + 2q + 3q^2". */
	std::string str() const;

private:
	void normalize();

	std::vector<mpz_class> coeffs_;
};

/* q-integer [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0. */
IntPoly q_int(int n);

/* q-factorial [n]_q! = [n]_q [n-1]_q ... [1]_q; [0]_q! = 1. */
IntPoly q_factorial(int n);

/* Gaussian binomial coefficient [n choose k]_q, computed by the q-Pascal
 * recurrence so no polynomial division is needed.  Zero when k < 0 or k > n. */
IntPoly q_binomial(int n, int k);

/* Finite Pochhammer-style product prod_{j=0}^{n-1} (1 -+ q^{first + j*step}).
 * The factor sign is minus by default; pass plus = true for (1 + q^...). */
IntPoly poch_general(int first, int step, int n, bool plus = false);

/* (q; q)_n = prod_{j=1}^{n} (1 - q^j); the empty product is 1. */
IntPoly poch_finite(int n);

}  // namespace qreg
