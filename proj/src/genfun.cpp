#include "qreg/genfun.hpp"

#include "qreg/parallel.hpp"
#include "qreg/partition.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>

namespace qreg {

namespace {

const IntPoly kZeroPoly;

long long binom2(long long s) {
	return s * (s + 1) / 2;  // binom(s + 1, 2)
}

IntPoly one_minus_q() {
	return IntPoly({mpz_class(1), mpz_class(-1)});
}

/* Visits every 1 <= c_1 < c_2 < ... < c_m <= limit in lexicographic order. */
void for_each_combination(int limit, int m,
                          const std::function<void(const std::vector<int>&)>& fn) {
	std::vector<int> combo;
	std::function<void(int)> rec = [&](int next) {
		if (static_cast<int>(combo.size()) == m) {
			fn(combo);
			return;
		}
		int slots_left = m - static_cast<int>(combo.size());
		for (int c = next; c + slots_left - 1 <= limit; ++c) {
			combo.push_back(c);
			rec(c + 1);
			combo.pop_back();
		}
	};
	rec(1);
}

void check_bounds(int xmax, int qmax) {
	if (xmax < 0 || qmax < 0)
		throw std::invalid_argument("series bounds must be non-negative");
}

}  // namespace

IntPoly a_direct(int m, int n) {
	if (m < 0 || n < 0) throw std::invalid_argument("a_direct: negative index");
	IntPoly total;
	for_each_combination(m + n, m, [&](const std::vector<int>& positions) {
		IntPoly prod = IntPoly::one();
		long long shift = 0;
		for (int j = 1; j <= m; ++j) {
			int i = positions[j - 1];
			shift += i;
			prod *= IntPoly::one() + IntPoly::monomial(-1, 2 * m + n + 1 - i - j);
		}
		total += prod.shifted(static_cast<int>(shift));
	});
	return total;
}

const IntPoly& ATable::at(int m, int n) {
	if (m < 0 || n < 0) return kZeroPoly;
	auto key = std::make_pair(m, n);
	if (auto it = memo_.find(key); it != memo_.end()) return it->second;
	IntPoly value;
	if (m == 0 && n == 0) {
		value = IntPoly::one();
	} else {
		IntPoly first = (IntPoly::one() + IntPoly::monomial(-1, 2 * m + n - 1)) * at(m - 1, n);
		value = (first + at(m, n - 1)).shifted(m);
	}
	return memo_.emplace(key, std::move(value)).first->second;
}

IntPoly a_recur(int m, int n) {
	ATable table;
	return table.at(m, n);
}

const IntPoly& BTable::at(int m, int n) {
	if (m < 0 || n < 0) return kZeroPoly;
	auto key = std::make_pair(m, n);
	if (auto it = memo_.find(key); it != memo_.end()) return it->second;
	IntPoly value;
	if (m == 0 && n == 0) {
		value = IntPoly::one();
	} else {
		value = q_int(2 * m + n - 1) * at(m - 1, n) + at(m, n - 1).shifted(m);
	}
	return memo_.emplace(key, std::move(value)).first->second;
}

IntPoly b_poly(int m, int n) {
	BTable table;
	return table.at(m, n);
}

BTableK::BTableK(int k) : k_(k) {
	if (k < 1) throw std::invalid_argument("BTableK: k must be >= 1");
}

const IntPoly& BTableK::at(const std::vector<int>& tuple) {
	if (static_cast<int>(tuple.size()) != k_)
		throw std::invalid_argument("BTableK::at: tuple length differs from k");
	for (int v : tuple)
		if (v < 0) return kZeroPoly;
	if (auto it = memo_.find(tuple); it != memo_.end()) return it->second;

	/* tuple[i] holds n_{k-i}; N = sum_j j * n_j. */
	long long weighted = 0;
	bool all_zero = true;
	for (int i = 0; i < k_; ++i) {
		weighted += static_cast<long long>(k_ - i) * tuple[i];
		if (tuple[i] != 0) all_zero = false;
	}

	IntPoly value;
	if (all_zero) {
		value = IntPoly::one();
	} else {
		int nn = static_cast<int>(weighted);
		for (int j = 1; j <= k_; ++j) {
			int idx = k_ - j;
			if (tuple[idx] == 0) continue;
			std::vector<int> prev = tuple;
			--prev[idx];
			IntPoly factor = IntPoly::one();
			for (int i = 2; i <= j; ++i) factor *= q_int(nn - i + 1);
			long long qexp = 0;
			for (int i = j + 1; i <= k_; ++i)
				qexp += static_cast<long long>(i - j) * tuple[k_ - i];
			value += (factor * at(prev)).shifted(static_cast<int>(qexp));
		}
	}
	return memo_.emplace(tuple, std::move(value)).first->second;
}

IntPoly b_poly_k(int k, const std::vector<int>& tuple) {
	BTableK table(k);
	return table.at(tuple);
}

XQSeries lhs_series(int k, int xmax, int qmax) {
	if (k < 1) throw std::invalid_argument("lhs_series: k must be >= 1");
	check_bounds(xmax, qmax);
	XQSeries out = XQSeries::one(xmax, qmax);
	/* Factors with j > qmax only reach retained coefficients through q^j or
	 * higher, so they are identity here. */
	for (int j = 1; j <= qmax; ++j) {
		XQSeries factor(xmax, qmax);
		factor.set_term(0, QSeries::one(qmax));
		for (int i = 1; i <= std::min(k, xmax); ++i) {
			long long e = static_cast<long long>(i) * j;
			if (e > qmax) break;
			QSeries s(qmax);
			s.add_at(static_cast<int>(e), 1);
			factor.set_term(i, std::move(s));
		}
		out *= factor;
	}
	return out;
}

namespace {

void collect_tuples(int k, int xmax, std::vector<int>& tuple, long long weighted,
                    std::vector<std::vector<int>>& out) {
	if (static_cast<int>(tuple.size()) == k) {
		out.push_back(tuple);
		return;
	}
	int j = k - static_cast<int>(tuple.size());  // the slot being filled holds n_j
	for (int v = 0; weighted + static_cast<long long>(j) * v <= xmax; ++v) {
		tuple.push_back(v);
		collect_tuples(k, xmax, tuple, weighted + static_cast<long long>(j) * v, out);
		tuple.pop_back();
	}
}

}  // namespace

XQSeries rhs_series(int k, int xmax, int qmax, DenomPath path, int threads) {
	if (k < 1) throw std::invalid_argument("rhs_series: k must be >= 1");
	check_bounds(xmax, qmax);

	std::vector<std::vector<int>> tuples;
	{
		std::vector<int> tuple;
		collect_tuples(k, xmax, tuple, 0, tuples);
	}

	/* Fill the recurrence table once, serially; workers then only read
	 * their own copies. */
	std::vector<IntPoly> bvals(tuples.size());
	{
		BTableK table(k);
		for (std::size_t i = 0; i < tuples.size(); ++i) bvals[i] = table.at(tuples[i]);
	}

	std::vector<int> xdeg(tuples.size(), 0);
	std::vector<std::optional<QSeries>> terms(tuples.size());
	parallel_for(tuples.size(), threads, [&](std::size_t idx) {
		const std::vector<int>& t = tuples[idx];
		long long weighted = 0, total = 0;
		for (int i = 0; i < k; ++i) {
			weighted += static_cast<long long>(k - i) * t[i];
			total += t[i];
		}
		long long base_exp = 0;
		long long prefix = 0;
		for (int i = 0; i < k; ++i) {
			prefix += t[i];
			base_exp += binom2(prefix);
		}
		if (base_exp > qmax) return;  // exact: the term starts at q^base_exp

		int nn = static_cast<int>(weighted);
		long long extra = weighted - total;  // exponent of (1 - q)
		QSeries term(qmax);
		if (path == DenomPath::Direct) {
			IntPoly numer = (one_minus_q().pow(static_cast<int>(extra)) * bvals[idx])
			                    .shifted(static_cast<int>(base_exp));
			term = series_from_poly(numer, qmax) *
			       series_recip(series_from_poly(poch_finite(nn), qmax));
		} else {
			IntPoly denom = one_minus_q().pow(static_cast<int>(total)) * q_factorial(nn);
			term = series_from_poly(bvals[idx].shifted(static_cast<int>(base_exp)), qmax) *
			       series_recip(series_from_poly(denom, qmax));
		}
		xdeg[idx] = nn;
		terms[idx] = std::move(term);
	});

	XQSeries out(xmax, qmax);
	for (std::size_t idx = 0; idx < tuples.size(); ++idx) {
		if (terms[idx]) out.add_to_term(xdeg[idx], *terms[idx]);
	}
	return out;
}

IntPoly profile_term_numerator(int m, int n, const std::vector<int>& repeats) {
	if (m < 0 || n < 0) throw std::invalid_argument("profile_term_numerator: negative index");
	if (static_cast<int>(repeats.size()) != m)
		throw std::invalid_argument("profile_term_numerator: expected m positions");
	IntPoly prod = IntPoly::one();
	long long shift = binom2(m + n);
	for (int j = 1; j <= m; ++j) {
		int i = repeats[j - 1];
		if (i < 1 || i > m + n || (j > 1 && repeats[j - 2] >= i))
			throw std::invalid_argument("profile_term_numerator: bad position vector");
		shift += i;
		prod *= IntPoly::one() + IntPoly::monomial(-1, 2 * m + n + 1 - i - j);
	}
	return prod.shifted(static_cast<int>(shift));
}

QSeries profile_term_series(int m, int n, const std::vector<int>& repeats, int qmax) {
	check_bounds(0, qmax);
	return series_from_poly(profile_term_numerator(m, n, repeats), qmax) *
	       series_recip(series_from_poly(poch_finite(2 * m + n), qmax));
}

XQSeries profile_sum_series(int xmax, int qmax) {
	check_bounds(xmax, qmax);
	XQSeries out(xmax, qmax);
	std::vector<std::optional<QSeries>> recip_cache(xmax + 1);
	for (int m = 0; 2 * m <= xmax; ++m) {
		for (int n = 0; 2 * m + n <= xmax; ++n) {
			if (binom2(m + n) + binom2(m) > qmax) break;  // minimal exponent already too big
			int parts = 2 * m + n;
			if (!recip_cache[parts])
				recip_cache[parts] = series_recip(series_from_poly(poch_finite(parts), qmax));
			for_each_combination(m + n, m, [&](const std::vector<int>& positions) {
				long long isum = 0;
				for (int i : positions) isum += i;
				if (binom2(m + n) + isum > qmax) return;
				QSeries term = series_from_poly(profile_term_numerator(m, n, positions), qmax) *
				               *recip_cache[parts];
				out.add_to_term(parts, term);
			});
		}
	}
	return out;
}

std::vector<CoeffMismatch> compare_series(const XQSeries& lhs, const XQSeries& rhs) {
	if (lhs.xmax() != rhs.xmax() || lhs.qmax() != rhs.qmax())
		throw std::invalid_argument("compare_series: bounds differ");
	std::vector<CoeffMismatch> out;
	for (int x = 0; x <= lhs.xmax(); ++x) {
		for (int q = 0; q <= lhs.qmax(); ++q) {
			const mpz_class& a = lhs.coeff(x, q);
			const mpz_class& b = rhs.coeff(x, q);
			if (a != b) out.push_back({x, q, a, b});
		}
	}
	return out;
}

std::string to_string(LeftMethod m) {
	return m == LeftMethod::Product ? "product" : "enumeration";
}

std::string to_string(RightMethod m) {
	return m == RightMethod::Recurrence ? "recurrence" : "profile-sum";
}

VerificationReport verify_identity(int k, int xmax, int qmax, LeftMethod left,
                                   RightMethod right, int threads) {
	if (right == RightMethod::ProfileSum && k != 2)
		throw std::invalid_argument("verify_identity: the profile-sum method is k = 2 only");

	auto start = std::chrono::steady_clock::now();
	XQSeries lhs = (left == LeftMethod::Product) ? lhs_series(k, xmax, qmax)
	                                             : oracle_series(k, xmax, qmax);
	XQSeries rhs = (right == RightMethod::Recurrence)
	                   ? rhs_series(k, xmax, qmax, DenomPath::Direct, threads)
	                   : profile_sum_series(xmax, qmax);
	VerificationReport report;
	report.k = k;
	report.xmax = xmax;
	report.qmax = qmax;
	report.lhs_method = to_string(left);
	report.rhs_method = to_string(right);
	report.mismatches = compare_series(lhs, rhs);
	report.verified = report.mismatches.empty();
	auto end = std::chrono::steady_clock::now();
	report.elapsed_ms =
	    std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
	return report;
}

bool ab_relation_check(int bound) {
	if (bound < 0) throw std::invalid_argument("ab_relation_check: negative bound");
	ATable as;
	BTable bs;
	for (int m = 0; m <= bound; ++m) {
		for (int n = 0; m + n <= bound; ++n) {
			IntPoly direct = a_direct(m, n);
			if (direct != as.at(m, n)) return false;
			IntPoly via_b = (one_minus_q().pow(m) * bs.at(m, n))
			                    .shifted(static_cast<int>(binom2(m)));
			if (direct != via_b) return false;
		}
	}
	return true;
}

}  // namespace qreg
