#pragma once

#include "qreg/genfun.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace qreg {

/* Unimodality on the dense coefficient sequence c_0 .. c_deg: weakly rises
 * to some pivot, then weakly falls.  Internal zero coefficients count. */
bool is_unimodal(const IntPoly& p);

struct ScanCounterexample {
	std::vector<int> tuple;
	IntPoly poly;

	friend bool operator==(const ScanCounterexample&, const ScanCounterexample&) = default;
};

/* A counterexample is a finding to report, never a failure: the scan always
 * completes, and counterexamples.empty() says whether the scanned range is
 * clean. */
struct ScanReport {
	int k = 0;
	int sum_bound = 0;
	long long tuples_checked = 0;
	long long tuples_expected = 0;  // binom(sum_bound + k, k)
	std::vector<ScanCounterexample> counterexamples;
	std::int64_t elapsed_ms = 0;

	bool clean() const { return counterexamples.empty(); }
};

/* Checks every b(n_k, ..., n_1) with index sum <= sum_bound for unimodality;
 * k >= 2 (the one-index polynomials are constant). */
ScanReport scan_unimodality(int k, int sum_bound, int threads = 1);

/* Same sweep against an arbitrary polynomial source, so the counterexample
 * path can be exercised with injected data. */
ScanReport scan_unimodality_with(int k, int sum_bound,
                                 const std::function<IntPoly(const std::vector<int>&)>& poly_at,
                                 int threads = 1);

/* Value at q = 1, i.e. the coefficient sum. */
mpz_class limit_q1(const IntPoly& p);

/* (2m+n)! / (m! n! 2^m): the q -> 1 limit of b(m, n), which lines up with
 * Bessel polynomial coefficients under n <- m+n, k <- m.  A circulating
 * variant puts (m+n)! in the denominator; that one is not even an integer
 * at (2, 2) (720/192) and fails the recurrence, so n! it is. */
mpz_class bessel_coeff(int m, int n);

/* True iff limit_q1(b(m, n)) equals bessel_coeff(m, n) for all m+n <= bound. */
bool bessel_limit_check(int bound);

struct QAnalogMismatch {
	int m = 0;
	int n = 0;
	IntPoly b;
	IntPoly q_analog;

	friend bool operator==(const QAnalogMismatch&, const QAnalogMismatch&) = default;
};

/* Compares b(m, n) with the Gaussian-binomial q-analog of the Bessel
 * coefficients, [2m+n choose m]_q, and returns every differing pair with
 * m >= 1 and m+n <= bound, ordered by (m, n).  The two q-analogs really are
 * different, so a non-empty result is the expected outcome. */
std::vector<QAnalogMismatch> q_bessel_mismatch(int bound);

}  // namespace qreg
