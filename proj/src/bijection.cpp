#include "qreg/bijection.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qreg {

int ReducedPair::total_parts() const {
	int n = 0;
	for (int m : word) n += m;
	return n;
}

Partition ReducedPair::base() const {
	std::vector<int> parts;
	for (std::size_t i = 0; i < word.size(); ++i)
		parts.insert(parts.end(), word[i], static_cast<int>(i) + 1);
	return Partition(std::move(parts));
}

long long ReducedPair::base_weight() const {
	long long w = 0;
	for (std::size_t i = 0; i < word.size(); ++i)
		w += static_cast<long long>(word[i]) * (static_cast<long long>(i) + 1);
	return w;
}

namespace {

void check_k(int k) {
	if (k < 1) throw std::invalid_argument("bijection: k must be >= 1");
}

void check_regular(const MultiplicityProfile& prof, int k) {
	for (std::size_t i = 0; i < prof.mults.size(); ++i) {
		if (prof.mults[i] > k) {
			std::ostringstream os;
			os << "reduce: part " << prof.sizes[i] << " occurs " << prof.mults[i]
			   << " times, more than k = " << k;
			throw std::invalid_argument(os.str());
		}
	}
}

/* j-th smallest distinct value of a weakly increasing part list, 1-based. */
int nth_distinct(const std::vector<int>& parts, int j) {
	int seen = 0;
	int prev = 0;
	for (int p : parts) {
		if (p != prev) {
			++seen;
			prev = p;
			if (seen == j) return p;
		}
	}
	throw std::logic_error("nth_distinct: index beyond the number of distinct sizes");
}

/* One backward step: bring the j-th smallest size mu_j down to j.  Every
 * part >= mu_j drops by d = mu_j - j, and lambda gains d copies of r, the
 * number of parts moved. */
void reduce_step(std::vector<int>& parts, int j, std::vector<int>& lambda_desc) {
	int mu = nth_distinct(parts, j);
	int d = mu - j;
	auto first = std::lower_bound(parts.begin(), parts.end(), mu);
	int r = static_cast<int>(parts.end() - first);
	for (auto it = first; it != parts.end(); ++it) *it -= d;
	lambda_desc.insert(lambda_desc.end(), d, r);
}

Partition lambda_from_desc(const std::vector<int>& lambda_desc) {
	/* Successive r values strictly decrease, so the reversed record is
	 * already weakly increasing; the Partition constructor re-checks. */
	return Partition(std::vector<int>(lambda_desc.rbegin(), lambda_desc.rend()));
}

}  // namespace

ReducedPair reduce(const Partition& p, int k) {
	check_k(k);
	MultiplicityProfile prof = profile(p);
	check_regular(prof, k);

	std::vector<int> parts = p.parts();
	std::vector<int> lambda_desc;
	int s = static_cast<int>(prof.sizes.size());
	for (int j = 1; j <= s; ++j) reduce_step(parts, j, lambda_desc);

	ReducedPair out{k, prof.mults, lambda_from_desc(lambda_desc)};
	if (Partition(parts) != out.base())
		throw std::logic_error("reduce: backward phase did not reach the base partition");
	return out;
}

std::vector<TraceStep> reduce_trace(const Partition& p, int k) {
	check_k(k);
	MultiplicityProfile prof = profile(p);
	check_regular(prof, k);

	std::vector<TraceStep> steps;
	std::vector<int> parts = p.parts();
	std::vector<int> lambda_desc;
	int s = static_cast<int>(prof.sizes.size());
	for (int j = 1; j <= s; ++j) {
		reduce_step(parts, j, lambda_desc);
		steps.push_back({Partition(parts), lambda_from_desc(lambda_desc)});
	}
	return steps;
}

Partition build(const ReducedPair& r) {
	check_k(r.k);
	for (std::size_t i = 0; i < r.word.size(); ++i) {
		if (r.word[i] < 1 || r.word[i] > r.k) {
			std::ostringstream os;
			os << "build: multiplicity word entry " << r.word[i] << " at position "
			   << i + 1 << " is outside 1.." << r.k;
			throw std::invalid_argument(os.str());
		}
	}

	const int total = r.total_parts();
	const auto& lam = r.lambda.parts();
	for (std::size_t i = 0; i < lam.size(); ++i) {
		if (lam[i] > total) {
			std::ostringstream os;
			os << "build: auxiliary part " << lam[i] << " at index " << i
			   << " exceeds the part count " << total;
			throw std::invalid_argument(os.str());
		}
	}
	if (r.k == 2) {
		std::set<int> banned = forbidden_sizes(r.word);
		for (std::size_t i = 0; i < lam.size(); ++i) {
			if (banned.count(lam[i])) {
				std::ostringstream os;
				os << "build: auxiliary part " << lam[i] << " at index " << i
				   << " is a forbidden size for this base";
				throw std::invalid_argument(os.str());
			}
		}
	}

	std::vector<int> parts = r.base().parts();
	for (int v = 1; v <= total; ++v) {
		long long f = std::count(lam.begin(), lam.end(), v);
		if (f == 0) continue;
		/* The v largest parts are the last v entries; moving each forward
		 * f times adds f to every one of them. */
		for (int idx = total - v; idx < total; ++idx)
			parts[idx] += static_cast<int>(f);
		if (!std::is_sorted(parts.begin(), parts.end()))
			throw std::logic_error("build: intermediate partition lost monotonicity");
	}

	Partition out(std::move(parts));
	if (!is_k_regular(out, r.k))
		throw std::logic_error("build: forward phase produced a non-k-regular partition");
	return out;
}

std::set<int> forbidden_sizes(int m, int n, const std::vector<int>& repeats) {
	if (m < 0 || n < 0) throw std::invalid_argument("forbidden_sizes: negative m or n");
	if (static_cast<int>(repeats.size()) != m)
		throw std::invalid_argument("forbidden_sizes: expected exactly m repeat positions");
	for (int j = 0; j < m; ++j) {
		if (repeats[j] < 1 || repeats[j] > m + n)
			throw std::invalid_argument("forbidden_sizes: repeat position out of range");
		if (j > 0 && repeats[j - 1] >= repeats[j])
			throw std::invalid_argument("forbidden_sizes: repeat positions must be strictly increasing");
	}
	std::set<int> out;
	for (int j = 1; j <= m; ++j) out.insert(2 * m + n + 1 - repeats[j - 1] - j);
	return out;
}

std::set<int> forbidden_sizes(const std::vector<int>& word) {
	int m = 0, n = 0;
	std::vector<int> repeats;
	for (std::size_t i = 0; i < word.size(); ++i) {
		if (word[i] == 2) {
			++m;
			repeats.push_back(static_cast<int>(i) + 1);
		} else if (word[i] == 1) {
			++n;
		} else {
			throw std::invalid_argument("forbidden_sizes: word entries must be 1 or 2");
		}
	}
	return forbidden_sizes(m, n, repeats);
}

std::set<int> forbidden_sizes_empirical(int k, const std::vector<int>& word,
                                        long long max_weight) {
	check_k(k);
	for (int m : word) {
		if (m < 1 || m > k)
			throw std::invalid_argument("forbidden_sizes_empirical: word entry outside 1..k");
	}
	int total = 0;
	for (int m : word) total += m;

	std::set<int> seen;
	for_each_with_profile(word, max_weight, [&](const Partition& p) {
		ReducedPair pair = reduce(p, k);
		for (int v : pair.lambda.parts()) seen.insert(v);
	});

	std::set<int> never;
	for (int v = 1; v <= total; ++v)
		if (!seen.count(v)) never.insert(v);
	return never;
}

}  // namespace qreg
