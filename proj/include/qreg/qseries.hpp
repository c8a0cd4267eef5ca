#pragma once

#include "qreg/intpoly.hpp"

namespace qreg {

/* Power series in q truncated at a fixed order: the coefficients of
 * q^0 .. q^trunc are exact integers, everything above is discarded.
 * Arithmetic never extends a truncation; combining operands with different
 * orders keeps the smaller one, which is the largest order for which the
 * retained coefficients are still exact. */
class QSeries {
public:
	/* Zero series through q^trunc. */
	explicit QSeries(int trunc);
	QSeries(std::vector<mpz_class> coeffs, int trunc);

	static QSeries one(int trunc);

	int trunc() const { return trunc_; }
	/* Coefficient of q^exp for 0 <= exp <= trunc; coefficients above the
	 * truncation order are unknown, so asking for one throws. */
	const mpz_class& coeff(int exp) const;
	const std::vector<mpz_class>& coeffs() const { return coeffs_; }

	void add_at(int exp, const mpz_class& value);

	/* Re-truncation to a lower order. */
	QSeries truncated(int t) const;

	QSeries& operator+=(const QSeries& r);
	QSeries& operator-=(const QSeries& r);
	QSeries operator-() const;

	friend QSeries operator+(QSeries a, const QSeries& b) { a += b; return a; }
	friend QSeries operator-(QSeries a, const QSeries& b) { a -= b; return a; }
	friend QSeries operator*(const QSeries& a, const QSeries& b);
	friend bool operator==(const QSeries&, const QSeries&) = default;

private:
	int trunc_ = 0;
	std::vector<mpz_class> coeffs_;  // size trunc_ + 1
};

/* The coefficients of p through q^trunc. */
QSeries series_from_poly(const IntPoly& p, int trunc);

/* Reciprocal through the series' own truncation order.  The constant
 * coefficient must be +1 or -1; anything else throws. */
QSeries series_recip(const QSeries& s);

}  // namespace qreg
