#pragma once

#include "qreg/xqseries.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qreg {

/* --- the a(m, n) family ---------------------------------------------------
 *
 * a(m, n) is the sum over position vectors 1 <= i_1 < ... < i_m <= m+n of
 *
 *   q^{i_1 + ... + i_m} (1 - q^{2m+n+1-i_1-1}) ... (1 - q^{2m+n+1-i_m-m}),
 *
 * and equivalently satisfies
 *
 *   a(m, n) = q^m (1 - q^{2m+n-1}) a(m-1, n) + q^m a(m, n-1)
 *
 * with a(0, 0) = 1 and a(m, n) = 0 for negative indices.  Both routes are
 * implemented and must agree.
 *
 * Closed forms: a(0, n) = 1 and a(m, 0) = q^{binom(m+1,2)} (q; q^2)_m.  The
 * variant of the latter with plus signs, (-q; q^2)_m, circulates but is
 * wrong: it contradicts the recurrence already at m = 2 (the tests pin the
 * minus-sign form). */

IntPoly a_direct(int m, int n);

class ATable {
public:
	const IntPoly& at(int m, int n);

private:
	std::map<std::pair<int, int>, IntPoly> memo_;
};

IntPoly a_recur(int m, int n);

/* --- the b(m, n) family and its k-index extension --------------------------
 *
 * b(m, n) = [2m+n-1]_q b(m-1, n) + q^m b(m, n-1), b(0, 0) = 1, negative
 * indices give 0.  These have constant term 1, non-negative coefficients,
 * and relate to a by a(m, n) = q^{binom(m+1, 2)} (1-q)^m b(m, n).
 *
 * The k-index table b(n_k, ..., n_1) (tuples are passed leftmost index
 * first) satisfies, with N = sum_j j*n_j,
 *
 *   b(n_k, ..., n_1) = sum_{j=1}^{k} [N-1]_q [N-2]_q ... [N-j+1]_q
 *       * q^{ sum_{i=j+1}^{k} (i-j) n_i } * b(..., n_j - 1, ...),
 *
 * with b(0, ..., 0) = 1 and 0 on any negative index.  k = 2 reproduces
 * b(m, n) and k = 1 gives the constant 1.
 *
 * The table classes memoize on first access and are not synchronized; fill
 * one on a single thread (or take copies) before any parallel reads. */

class BTable {
public:
	const IntPoly& at(int m, int n);

private:
	std::map<std::pair<int, int>, IntPoly> memo_;
};

IntPoly b_poly(int m, int n);

class BTableK {
public:
	explicit BTableK(int k);

	int k() const { return k_; }
	const IntPoly& at(const std::vector<int>& tuple);

private:
	int k_;
	std::map<std::vector<int>, IntPoly> memo_;
};

IntPoly b_poly_k(int k, const std::vector<int>& tuple);

/* --- series sides of the identity -----------------------------------------
 *
 * Left side: prod_{j>=1} (1 + x q^j + x^2 q^{2j} + ... + x^k q^{kj}),
 * the product generating k-regular partitions by length (x) and weight (q).
 * Factors with j > qmax cannot touch retained coefficients and are skipped.
 *
 * Right side: sum over index tuples of
 *
 *   x^N q^E (1-q)^e b(n_k, ..., n_1) / (q; q)_N,
 *
 * where N = sum j*n_j, E = sum_{j=1}^{k} binom(s_j + 1, 2) with partial sums
 * s_j = n_k + ... + n_j, and e = sum_{j>=2} (j-1) n_j = N - s_1.  A tuple
 * contributes nothing unless N <= xmax and E <= qmax; since b has constant
 * term 1 the exclusion is exact, not heuristic. */

XQSeries lhs_series(int k, int xmax, int qmax);

enum class DenomPath {
	/* Multiply the polynomial numerator by the reciprocal of (q;q)_N. */
	Direct,
	/* Cancel (1-q)^e against (q;q)_N = (1-q)^N [N]_q! first. */
	Factored,
};

XQSeries rhs_series(int k, int xmax, int qmax, DenomPath path = DenomPath::Direct,
                    int threads = 1);

/* Numerator of the fixed-profile generating term for the two-multiplicity
 * case: q^{binom(m+n+1,2) + i_1 + ... + i_m} prod_j (1 - q^{2m+n+1-i_j-j}). */
IntPoly profile_term_numerator(int m, int n, const std::vector<int>& repeats);

/* The full fixed-profile term, numerator over (q; q)_{2m+n}: its q^W
 * coefficient counts the 2-regular partitions of W with that profile. */
QSeries profile_term_series(int m, int n, const std::vector<int>& repeats, int qmax);

/* Direct evaluation of the profile-by-profile double sum (two-multiplicity
 * case only): sum over (m, n, positions) of x^{2m+n} times the profile term. */
XQSeries profile_sum_series(int xmax, int qmax);

/* --- coefficientwise verification ----------------------------------------- */

struct CoeffMismatch {
	int x = 0;
	int q = 0;
	mpz_class lhs;
	mpz_class rhs;

	friend bool operator==(const CoeffMismatch&, const CoeffMismatch&) = default;
};

/* Both sides must share xmax and qmax; mismatches come back ordered by
 * (x, q). */
std::vector<CoeffMismatch> compare_series(const XQSeries& lhs, const XQSeries& rhs);

enum class LeftMethod { Product, Enumeration };
enum class RightMethod { Recurrence, ProfileSum };

std::string to_string(LeftMethod m);
std::string to_string(RightMethod m);

struct VerificationReport {
	int k = 0;
	int xmax = 0;
	int qmax = 0;
	bool verified = false;
	std::string lhs_method;
	std::string rhs_method;
	std::vector<CoeffMismatch> mismatches;
	std::int64_t elapsed_ms = 0;
};

/* Coefficientwise check of the k-regular identity over x-degree <= xmax and
 * q-degree <= qmax.  A mismatch is a report outcome, not an error;
 * RightMethod::ProfileSum requires k = 2. */
VerificationReport verify_identity(int k, int xmax, int qmax,
                                   LeftMethod left = LeftMethod::Product,
                                   RightMethod right = RightMethod::Recurrence,
                                   int threads = 1);

/* Exact check of a(m, n) = q^{binom(m+1,2)} (1-q)^m b(m, n) for all
 * m + n <= bound, with a computed both ways. */
bool ab_relation_check(int bound);

}  // namespace qreg
