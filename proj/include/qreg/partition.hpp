#pragma once

#include "qreg/xqseries.hpp"

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qreg {

/* Integer partition with the parts stored weakly increasing, all >= 1.
 * The default-constructed value is the empty partition. */
class Partition {
public:
	Partition() = default;
	explicit Partition(std::vector<int> parts);

	/* Text form: space-separated weakly increasing positive integers,
	 * e.g. "3 6 10 10 15 19 19".  Blank text is the empty partition. */
	static Partition parse(const std::string& text);
	std::string str() const;

	const std::vector<int>& parts() const { return parts_; }
	long long weight() const;
	int length() const { return static_cast<int>(parts_.size()); }
	bool empty() const { return parts_.empty(); }

	friend bool operator==(const Partition&, const Partition&) = default;
	friend auto operator<=>(const Partition& a, const Partition& b) {
		return a.parts_ <=> b.parts_;
	}

private:
	std::vector<int> parts_;
};

/* Distinct part sizes with their multiplicities, sizes strictly increasing. */
struct MultiplicityProfile {
	std::vector<int> sizes;
	std::vector<int> mults;

	int max_mult() const;
	/* 1-based positions whose multiplicity equals the given value. */
	std::vector<int> positions_with_mult(int mult) const;

	friend bool operator==(const MultiplicityProfile&, const MultiplicityProfile&) = default;
};

MultiplicityProfile profile(const Partition& p);

/* True iff no part size occurs more than k times; k >= 1. */
bool is_k_regular(const Partition& p, int k);

/* Visits every partition of n with all multiplicities <= cap, in lexicographic
 * order on the weakly increasing part lists.  cap < 1 means no bound. */
void for_each_k_regular(int n, int cap, const std::function<void(const Partition&)>& fn);

std::vector<Partition> enumerate_k_regular(int n, int k);
std::vector<Partition> enumerate_partitions(int n);

long long count_k_regular(int n, int k, std::optional<int> length = std::nullopt);
long long count_partitions(int n, std::optional<int> length = std::nullopt);

/* Brute-force two-variable series: the coefficient of x^L q^W is the number
 * of k-regular partitions of W with exactly L parts, for L <= xmax and
 * W <= qmax.  This is the enumeration ground truth that the product and
 * sum-side series are checked against. */
XQSeries oracle_series(int k, int xmax, int qmax);

/* Visits every partition whose multiplicity profile is exactly `word`
 * (distinct sizes mu_1 < ... < mu_s, size mu_i repeated word[i-1] times)
 * and whose weight is at most max_weight, in increasing size-vector order. */
void for_each_with_profile(const std::vector<int>& word, long long max_weight,
                           const std::function<void(const Partition&)>& fn);

}  // namespace qreg
