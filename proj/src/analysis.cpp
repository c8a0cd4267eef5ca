#include "qreg/analysis.hpp"

#include "qreg/parallel.hpp"

#include <chrono>
#include <stdexcept>

namespace qreg {

bool is_unimodal(const IntPoly& p) {
	const auto& c = p.coeffs();
	bool rising = true;
	for (std::size_t i = 1; i < c.size(); ++i) {
		if (c[i] > c[i - 1]) {
			if (!rising) return false;
		} else if (c[i] < c[i - 1]) {
			rising = false;
		}
	}
	return true;
}

namespace {

void collect_by_sum(int k, int sum_bound, std::vector<int>& tuple, int used,
                    std::vector<std::vector<int>>& out) {
	if (static_cast<int>(tuple.size()) == k) {
		out.push_back(tuple);
		return;
	}
	for (int v = 0; used + v <= sum_bound; ++v) {
		tuple.push_back(v);
		collect_by_sum(k, sum_bound, tuple, used + v, out);
		tuple.pop_back();
	}
}

long long tuples_with_sum_at_most(int k, int bound) {
	/* binom(bound + k, k) */
	long long r = 1;
	for (int i = 1; i <= k; ++i) r = r * (bound + i) / i;
	return r;
}

}  // namespace

ScanReport scan_unimodality_with(int k, int sum_bound,
                                 const std::function<IntPoly(const std::vector<int>&)>& poly_at,
                                 int threads) {
	if (k < 2) throw std::invalid_argument("scan_unimodality: k must be >= 2");
	if (sum_bound < 0) throw std::invalid_argument("scan_unimodality: negative bound");

	auto start = std::chrono::steady_clock::now();
	std::vector<std::vector<int>> tuples;
	{
		std::vector<int> tuple;
		collect_by_sum(k, sum_bound, tuple, 0, tuples);
	}

	std::vector<IntPoly> polys(tuples.size());
	for (std::size_t i = 0; i < tuples.size(); ++i) polys[i] = poly_at(tuples[i]);

	std::vector<char> bad(tuples.size(), 0);
	parallel_for(tuples.size(), threads,
	             [&](std::size_t i) { bad[i] = is_unimodal(polys[i]) ? 0 : 1; });

	ScanReport report;
	report.k = k;
	report.sum_bound = sum_bound;
	report.tuples_checked = static_cast<long long>(tuples.size());
	report.tuples_expected = tuples_with_sum_at_most(k, sum_bound);
	if (report.tuples_checked != report.tuples_expected)
		throw std::logic_error("scan_unimodality: tuple sweep is incomplete");
	for (std::size_t i = 0; i < tuples.size(); ++i) {
		if (bad[i]) report.counterexamples.push_back({tuples[i], polys[i]});
	}
	auto end = std::chrono::steady_clock::now();
	report.elapsed_ms =
	    std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
	return report;
}

ScanReport scan_unimodality(int k, int sum_bound, int threads) {
	BTableK table(k);
	return scan_unimodality_with(
	    k, sum_bound, [&](const std::vector<int>& t) { return table.at(t); }, threads);
}

mpz_class limit_q1(const IntPoly& p) {
	return p.eval_at_one();
}

mpz_class bessel_coeff(int m, int n) {
	if (m < 0 || n < 0) throw std::invalid_argument("bessel_coeff: negative index");
	mpz_class numer, mf, nf;
	mpz_fac_ui(numer.get_mpz_t(), 2 * m + n);
	mpz_fac_ui(mf.get_mpz_t(), m);
	mpz_fac_ui(nf.get_mpz_t(), n);
	mpz_class denom = mf * nf;
	mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), m);
	mpz_class quot, rem;
	mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
	if (rem != 0) throw std::logic_error("bessel_coeff: quotient is not an integer");
	return quot;
}

bool bessel_limit_check(int bound) {
	if (bound < 0) throw std::invalid_argument("bessel_limit_check: negative bound");
	BTable table;
	for (int m = 0; m <= bound; ++m) {
		for (int n = 0; m + n <= bound; ++n) {
			if (limit_q1(table.at(m, n)) != bessel_coeff(m, n)) return false;
		}
	}
	return true;
}

std::vector<QAnalogMismatch> q_bessel_mismatch(int bound) {
	if (bound < 0) throw std::invalid_argument("q_bessel_mismatch: negative bound");
	BTable table;
	std::vector<QAnalogMismatch> out;
	for (int m = 1; m <= bound; ++m) {
		for (int n = 0; m + n <= bound; ++n) {
			const IntPoly& b = table.at(m, n);
			IntPoly analog = q_binomial(2 * m + n, m);
			if (b != analog) out.push_back({m, n, b, analog});
		}
	}
	return out;
}

}  // namespace qreg
