#pragma once

#include "qreg/partition.hpp"

#include <set>
#include <vector>

namespace qreg {

/* Image of the backward phase: a k-regular partition decomposes into the
 * minimal-weight base partition with the same multiplicity pattern (part
 * sizes 1..s, size i repeated word[i-1] times) plus an auxiliary partition
 * lambda recording the moves.  Every lambda part is at most the total part
 * count N = sum(word). */
struct ReducedPair {
	int k = 1;
	std::vector<int> word;  // multiplicity of base size i at word[i-1], each in 1..k
	Partition lambda;

	int total_parts() const;
	Partition base() const;
	long long base_weight() const;

	friend bool operator==(const ReducedPair&, const ReducedPair&) = default;
};

struct TraceStep {
	Partition intermediate;
	Partition lambda_so_far;
};

/* Backward phase: peel the j-th smallest part size mu_j down to j, appending
 * one lambda part per unit moved.  Weight is conserved:
 * wt(p) = wt(base) + wt(lambda).  Throws if p is not k-regular. */
ReducedPair reduce(const Partition& p, int k);

/* As reduce, but returns the intermediate partition and the lambda collected
 * so far after each step j = 1..s. */
std::vector<TraceStep> reduce_trace(const Partition& p, int k);

/* Forward phase: starting from the base partition, the r largest parts move
 * forward once for every lambda part equal to r, r = 1..N.  Inverse of
 * reduce on valid input.  Throws when lambda breaks the part-count bound or,
 * for k = 2, contains a forbidden size. */
Partition build(const ReducedPair& r);

/* The two-multiplicity case: with m doubled sizes at positions
 * i_1 < ... < i_m among m+n sizes, lambda can never contain the m values
 * 2m+n+1-i_j-j.  Throws on a malformed position vector. */
std::set<int> forbidden_sizes(int m, int n, const std::vector<int>& repeats);

/* Same, reading (m, n, positions) off a multiplicity word over {1, 2}. */
std::set<int> forbidden_sizes(const std::vector<int>& word);

/* Sizes 1..N that never occur in lambda across reduce() of every k-regular
 * partition with the given multiplicity word and weight <= max_weight.
 * Purely observational; for k = 2 it matches forbidden_sizes. */
std::set<int> forbidden_sizes_empirical(int k, const std::vector<int>& word,
                                        long long max_weight);

}  // namespace qreg
