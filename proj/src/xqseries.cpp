#include "qreg/xqseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qreg {

XQSeries::XQSeries(int xmax, int qmax) : xmax_(xmax), qmax_(qmax) {
	if (xmax < 0) throw std::invalid_argument("XQSeries: negative xmax");
	terms_.assign(xmax + 1, QSeries(qmax));
}

XQSeries XQSeries::one(int xmax, int qmax) {
	XQSeries s(xmax, qmax);
	s.terms_[0] = QSeries::one(qmax);
	return s;
}

const QSeries& XQSeries::term(int xdeg) const {
	if (xdeg < 0 || xdeg > xmax_)
		throw std::out_of_range("XQSeries::term: x-degree beyond xmax");
	return terms_[xdeg];
}

const mpz_class& XQSeries::coeff(int xdeg, int qdeg) const {
	return term(xdeg).coeff(qdeg);
}

void XQSeries::set_term(int xdeg, QSeries s) {
	if (xdeg < 0 || xdeg > xmax_)
		throw std::out_of_range("XQSeries::set_term: x-degree beyond xmax");
	if (s.trunc() != qmax_)
		throw std::invalid_argument("XQSeries::set_term: term truncation differs from qmax");
	terms_[xdeg] = std::move(s);
}

void XQSeries::add_to_term(int xdeg, const QSeries& s) {
	if (xdeg < 0 || xdeg > xmax_)
		throw std::out_of_range("XQSeries::add_to_term: x-degree beyond xmax");
	if (s.trunc() != qmax_)
		throw std::invalid_argument("XQSeries::add_to_term: term truncation differs from qmax");
	terms_[xdeg] += s;
}

void XQSeries::add_to_coeff(int xdeg, int qdeg, const mpz_class& value) {
	if (xdeg < 0 || xdeg > xmax_)
		throw std::out_of_range("XQSeries::add_to_coeff: x-degree beyond xmax");
	terms_[xdeg].add_at(qdeg, value);
}

XQSeries& XQSeries::operator*=(const XQSeries& r) {
	*this = xq_mul(*this, r);
	return *this;
}

XQSeries& XQSeries::operator+=(const XQSeries& r) {
	if (qmax_ != r.qmax_)
		throw std::invalid_argument("XQSeries: mismatched qmax");
	int xm = std::min(xmax_, r.xmax_);
	terms_.resize(xm + 1, QSeries(qmax_));
	xmax_ = xm;
	for (int d = 0; d <= xm; ++d) terms_[d] += r.terms_[d];
	return *this;
}

XQSeries xq_mul(const XQSeries& a, const XQSeries& b) {
	if (a.qmax() != b.qmax())
		throw std::invalid_argument("xq_mul: mismatched qmax");
	XQSeries out(std::min(a.xmax(), b.xmax()), a.qmax());
	for (int i = 0; i <= a.xmax(); ++i) {
		for (int j = 0; i + j <= out.xmax() && j <= b.xmax(); ++j) {
			out.add_to_term(i + j, a.term(i) * b.term(j));
		}
	}
	return out;
}

}  // namespace qreg
