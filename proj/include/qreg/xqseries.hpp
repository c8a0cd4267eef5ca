#pragma once

#include "qreg/qseries.hpp"

#include <vector>

namespace qreg {

/* Bivariate truncated series: x-degrees 0 .. xmax, each carrying a QSeries
 * in q truncated at qmax.  Multiplication drops x-degrees above xmax, which
 * is exact for the retained degrees because products only ever raise the
 * x-degree. */
class XQSeries {
public:
	XQSeries(int xmax, int qmax);

	static XQSeries one(int xmax, int qmax);

	int xmax() const { return xmax_; }
	int qmax() const { return qmax_; }

	const QSeries& term(int xdeg) const;
	const mpz_class& coeff(int xdeg, int qdeg) const;

	void set_term(int xdeg, QSeries s);
	void add_to_term(int xdeg, const QSeries& s);
	void add_to_coeff(int xdeg, int qdeg, const mpz_class& value);

	/* Operands must share qmax; the result keeps the smaller xmax. */
	XQSeries& operator*=(const XQSeries& r);
	XQSeries& operator+=(const XQSeries& r);

	friend XQSeries operator*(XQSeries a, const XQSeries& b) { a *= b; return a; }
	friend XQSeries operator+(XQSeries a, const XQSeries& b) { a += b; return a; }
	friend bool operator==(const XQSeries&, const XQSeries&) = default;

private:
	int xmax_ = 0;
	int qmax_ = 0;
	std::vector<QSeries> terms_;  // index = x-degree, size xmax_ + 1
};

XQSeries xq_mul(const XQSeries& a, const XQSeries& b);

}  // namespace qreg
