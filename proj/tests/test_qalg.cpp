#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qreg/intpoly.hpp"
#include "qreg/partition.hpp"
#include "qreg/qseries.hpp"
#include "qreg/xqseries.hpp"

#include <random>

using namespace qreg;

namespace {

IntPoly poly(std::vector<long> coeffs) {
	return IntPoly(std::vector<mpz_class>(coeffs.begin(), coeffs.end()));
}

IntPoly random_poly(std::mt19937& rng) {
	std::uniform_int_distribution<int> deg(0, 6);
	std::uniform_int_distribution<long> coeff(-9, 9);
	std::vector<mpz_class> c(deg(rng) + 1);
	for (auto& x : c) x = coeff(rng);
	return IntPoly(std::move(c));
}

/* Independent count of partitions of w into parts <= maxpart, by direct
 * enumeration. */
long partitions_with_parts_at_most(int w, int maxpart) {
	long count = 0;
	for_each_k_regular(w, 0, [&](const Partition& p) {
		if (p.empty() || p.parts().back() <= maxpart) ++count;
	});
	return count;
}

}  // namespace

TEST_CASE("polynomial addition") {
	CHECK(poly({1, 1}) + poly({1, -1}) == poly({2}));
	CHECK(poly({1, 2}) + IntPoly() == poly({1, 2}));
	CHECK(poly({1, 2}) + poly({0, 1, 1}) == poly({1, 3, 1}));
}

TEST_CASE("polynomial multiplication") {
	CHECK(poly({1, 1}) * poly({1, 0, 0, 1}) == poly({1, 1, 0, 1, 1}));
	CHECK(poly({3, -2, 5}) * IntPoly::one() == poly({3, -2, 5}));
	CHECK(poly({1, -1}) * poly({1, 0, -1}) * poly({1, 0, 0, -1}) ==
	      poly({1, -1, -1, 0, 1, 1, -1}));
}

TEST_CASE("normalization is structural") {
	CHECK(IntPoly(std::vector<mpz_class>{1, 0, 0}) == poly({1}));
	CHECK(IntPoly(std::vector<mpz_class>{0, 0}) == IntPoly::zero());
	CHECK(IntPoly::zero().degree() == -1);
	CHECK((poly({1, 1}) - poly({1, 1})) == IntPoly::zero());
}

TEST_CASE("ring axioms on random triples") {
	std::mt19937 rng(20240517);
	for (int trial = 0; trial < 60; ++trial) {
		IntPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
		CHECK((a + b) + c == a + (b + c));
		CHECK(a + b == b + a);
		CHECK(a * b == b * a);
		CHECK((a * b) * c == a * (b * c));
		CHECK(a * (b + c) == a * b + a * c);
	}
}

TEST_CASE("q-integers") {
	CHECK(q_int(4) == poly({1, 1, 1, 1}));
	CHECK(q_int(0) == IntPoly::zero());
	CHECK(q_int(1) == IntPoly::one());
}

TEST_CASE("q-factorials") {
	CHECK(q_factorial(0) == IntPoly::one());
	CHECK(q_factorial(2) == poly({1, 1}));
	CHECK(q_factorial(3) == poly({1, 2, 2, 1}));
}

TEST_CASE("finite Pochhammer products") {
	CHECK(poch_finite(0) == IntPoly::one());
	CHECK(poch_finite(1) == poly({1, -1}));
	CHECK(poch_finite(3) == poly({1, -1, -1, 0, 1, 1, -1}));
	CHECK(poch_general(1, 2, 2) == poly({1, -1, 0, -1, 1}));         // (q; q^2)_2
	CHECK(poch_general(1, 1, 2, true) == poly({1, 1, 1, 1}));        // (-q; q)_2
}

TEST_CASE("Gaussian binomials") {
	CHECK(q_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
	CHECK(q_binomial(3, 1) == poly({1, 1, 1}));
	CHECK(q_binomial(5, 7) == IntPoly::zero());
	CHECK(q_binomial(6, 0) == IntPoly::one());
	/* Multiplicative definition without division:
	 * [n choose k]_q [k]_q! [n-k]_q! = [n]_q!. */
	for (int n = 0; n <= 8; ++n) {
		for (int k = 0; k <= n; ++k) {
			CHECK(q_binomial(n, k) * q_factorial(k) * q_factorial(n - k) == q_factorial(n));
		}
	}
}

TEST_CASE("polynomial pretty printing") {
	CHECK(poly({1, 2, 3}).str() == "1 + 2q + 3q^2");
	CHECK(poly({0, 0, 0, 1, -1, 0, -1, 1}).str() == "q^3 - q^4 - q^6 + q^7");
	CHECK(IntPoly::zero().str() == "0");
	CHECK(poly({-1, 1}).str() == "-1 + q");
}

TEST_CASE("series from polynomial") {
	QSeries s = series_from_poly(poly({1, 0, 0, 0, 0, 1}), 3);
	CHECK(s == QSeries::one(3));
	CHECK(series_from_poly(IntPoly::zero(), 10) == QSeries(10));
	QSeries t = series_from_poly(poly({1, 2}), 10);
	CHECK(t.coeff(0) == 1);
	CHECK(t.coeff(1) == 2);
	for (int i = 2; i <= 10; ++i) CHECK(t.coeff(i) == 0);
}

TEST_CASE("series arithmetic keeps the smaller truncation") {
	QSeries a = QSeries::one(5);
	QSeries b = QSeries::one(3);
	CHECK((a + b).trunc() == 3);
	CHECK((a * b).trunc() == 3);
	CHECK_THROWS_AS(a.coeff(6), std::out_of_range);

	SUBCASE("explicit re-truncation only goes down") {
		QSeries s = series_from_poly(poly({1, 2, 3, 4}), 5);
		QSeries t = s.truncated(2);
		CHECK(t.trunc() == 2);
		CHECK(t.coeff(2) == 3);
		CHECK_THROWS_AS(s.truncated(9), std::invalid_argument);
	}
}

TEST_CASE("series reciprocal") {
	SUBCASE("geometric series") {
		QSeries s = series_recip(series_from_poly(poly({1, -1}), 4));
		CHECK(s == series_from_poly(poly({1, 1, 1, 1, 1}), 4));
	}
	SUBCASE("identity") {
		CHECK(series_recip(QSeries::one(5)) == QSeries::one(5));
	}
	SUBCASE("parts at most two") {
		QSeries s = series_recip(series_from_poly(poch_finite(2), 4));
		/* Coefficient of q^w counts partitions of w into parts <= 2. */
		for (int w = 0; w <= 4; ++w) CHECK(s.coeff(w) == partitions_with_parts_at_most(w, 2));
		CHECK(s == series_from_poly(poly({1, 1, 2, 2, 3}), 4));
	}
	SUBCASE("negative unit constant term") {
		QSeries s = series_from_poly(poly({-1, 1}), 6);
		CHECK(s * series_recip(s) == QSeries::one(6));
	}
	SUBCASE("non-unit constant terms are rejected") {
		CHECK_THROWS_AS(series_recip(series_from_poly(poly({2, 1}), 4)), std::domain_error);
		CHECK_THROWS_AS(series_recip(QSeries(4)), std::domain_error);
	}
}

TEST_CASE("reciprocal round trips on random unit series") {
	std::mt19937 rng(987123);
	std::uniform_int_distribution<long> coeff(-9, 9);
	for (int trial = 0; trial < 40; ++trial) {
		std::vector<mpz_class> c(13);
		c[0] = (trial % 2 == 0) ? 1 : -1;
		for (std::size_t i = 1; i < c.size(); ++i) c[i] = coeff(rng);
		QSeries s(std::move(c), 12);
		CHECK(s * series_recip(s) == QSeries::one(12));
	}
}

TEST_CASE("Pochhammer reciprocal round trips") {
	for (int n = 0; n <= 6; ++n) {
		QSeries s = series_from_poly(poch_finite(n), 18);
		CHECK(s * series_recip(s) == QSeries::one(18));
	}
}

TEST_CASE("reciprocal Pochhammer counts bounded-part partitions") {
	for (int n = 1; n <= 6; ++n) {
		QSeries s = series_recip(series_from_poly(poch_finite(n), 20));
		for (int w = 0; w <= 20; ++w) {
			CAPTURE(n);
			CAPTURE(w);
			CHECK(s.coeff(w) == partitions_with_parts_at_most(w, n));
		}
	}
}

TEST_CASE("bivariate multiplication") {
	SUBCASE("identity") {
		XQSeries u(3, 6);
		u.add_to_coeff(0, 0, 1);
		u.add_to_coeff(1, 2, 5);
		u.add_to_coeff(3, 6, -2);
		CHECK(xq_mul(u, XQSeries::one(3, 6)) == u);
	}
	SUBCASE("x-degrees above xmax are dropped") {
		XQSeries a = XQSeries::one(1, 6);
		a.add_to_coeff(1, 1, 1);  // 1 + x q
		XQSeries b = XQSeries::one(1, 6);
		b.add_to_coeff(1, 2, 1);  // 1 + x q^2
		XQSeries prod = xq_mul(a, b);
		XQSeries expect(1, 6);
		expect.add_to_coeff(0, 0, 1);
		expect.add_to_coeff(1, 1, 1);
		expect.add_to_coeff(1, 2, 1);
		CHECK(prod == expect);
	}
	SUBCASE("retained cross term") {
		XQSeries a = XQSeries::one(2, 6);
		a.add_to_coeff(1, 1, 1);
		XQSeries b = XQSeries::one(2, 6);
		b.add_to_coeff(1, 2, 1);
		XQSeries prod = xq_mul(a, b);
		CHECK(prod.coeff(2, 3) == 1);
		CHECK(prod.coeff(1, 1) == 1);
		CHECK(prod.coeff(1, 2) == 1);
		CHECK(prod.coeff(0, 0) == 1);
	}
	SUBCASE("mismatched qmax is rejected") {
		CHECK_THROWS_AS(xq_mul(XQSeries::one(2, 5), XQSeries::one(2, 6)),
		                std::invalid_argument);
	}
	SUBCASE("bivariate addition") {
		XQSeries a = XQSeries::one(3, 6);
		a.add_to_coeff(2, 4, 3);
		XQSeries b(2, 6);
		b.add_to_coeff(2, 4, -3);
		XQSeries sum = a + b;
		CHECK(sum.xmax() == 2);
		CHECK(sum.coeff(0, 0) == 1);
		CHECK(sum.coeff(2, 4) == 0);
		CHECK_THROWS_AS(XQSeries::one(2, 5) + XQSeries::one(2, 6), std::invalid_argument);
	}
}
