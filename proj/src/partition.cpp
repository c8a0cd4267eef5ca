#include "qreg/partition.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qreg {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
	for (std::size_t i = 0; i < parts_.size(); ++i) {
		if (parts_[i] < 1)
			throw std::invalid_argument("Partition: parts must be positive");
		if (i > 0 && parts_[i - 1] > parts_[i])
			throw std::invalid_argument("Partition: parts must be weakly increasing");
	}
}

Partition Partition::parse(const std::string& text) {
	std::istringstream is(text);
	std::vector<int> parts;
	std::string token;
	while (is >> token) {
		std::size_t used = 0;
		int value = 0;
		try {
			value = std::stoi(token, &used);
		} catch (const std::exception&) {
			throw std::invalid_argument("Partition::parse: bad token '" + token + "'");
		}
		if (used != token.size())
			throw std::invalid_argument("Partition::parse: bad token '" + token + "'");
		parts.push_back(value);
	}
	return Partition(std::move(parts));
}

std::string Partition::str() const {
	std::ostringstream os;
	for (std::size_t i = 0; i < parts_.size(); ++i) {
		if (i > 0) os << ' ';
		os << parts_[i];
	}
	return os.str();
}

long long Partition::weight() const {
	long long w = 0;
	for (int p : parts_) w += p;
	return w;
}

int MultiplicityProfile::max_mult() const {
	int m = 0;
	for (int x : mults) m = std::max(m, x);
	return m;
}

std::vector<int> MultiplicityProfile::positions_with_mult(int mult) const {
	std::vector<int> out;
	for (std::size_t i = 0; i < mults.size(); ++i)
		if (mults[i] == mult) out.push_back(static_cast<int>(i) + 1);
	return out;
}

MultiplicityProfile profile(const Partition& p) {
	MultiplicityProfile prof;
	for (int part : p.parts()) {
		if (!prof.sizes.empty() && prof.sizes.back() == part) {
			++prof.mults.back();
		} else {
			prof.sizes.push_back(part);
			prof.mults.push_back(1);
		}
	}
	return prof;
}

bool is_k_regular(const Partition& p, int k) {
	if (k < 1) throw std::invalid_argument("is_k_regular: k must be >= 1");
	return profile(p).max_mult() <= k;
}

namespace {

void enumerate_rec(int remaining, int min_part, int cap, std::vector<int>& acc,
                   const std::function<void(const Partition&)>& fn) {
	if (remaining == 0) {
		fn(Partition(acc));
		return;
	}
	for (int part = min_part; part <= remaining; ++part) {
		int run = 0;
		for (auto it = acc.rbegin(); it != acc.rend() && *it == part; ++it) ++run;
		if (run >= cap) continue;
		acc.push_back(part);
		enumerate_rec(remaining - part, part, cap, acc, fn);
		acc.pop_back();
	}
}

}  // namespace

void for_each_k_regular(int n, int cap, const std::function<void(const Partition&)>& fn) {
	if (n < 0) throw std::invalid_argument("for_each_k_regular: negative n");
	if (cap < 1) cap = std::numeric_limits<int>::max();
	std::vector<int> acc;
	enumerate_rec(n, 1, cap, acc, fn);
}

std::vector<Partition> enumerate_k_regular(int n, int k) {
	if (k < 1) throw std::invalid_argument("enumerate_k_regular: k must be >= 1");
	std::vector<Partition> out;
	for_each_k_regular(n, k, [&](const Partition& p) { out.push_back(p); });
	return out;
}

std::vector<Partition> enumerate_partitions(int n) {
	std::vector<Partition> out;
	for_each_k_regular(n, 0, [&](const Partition& p) { out.push_back(p); });
	return out;
}

long long count_k_regular(int n, int k, std::optional<int> length) {
	if (k < 1) throw std::invalid_argument("count_k_regular: k must be >= 1");
	long long count = 0;
	for_each_k_regular(n, k, [&](const Partition& p) {
		if (!length || p.length() == *length) ++count;
	});
	return count;
}

long long count_partitions(int n, std::optional<int> length) {
	long long count = 0;
	for_each_k_regular(n, 0, [&](const Partition& p) {
		if (!length || p.length() == *length) ++count;
	});
	return count;
}

XQSeries oracle_series(int k, int xmax, int qmax) {
	if (k < 1) throw std::invalid_argument("oracle_series: k must be >= 1");
	XQSeries out(xmax, qmax);
	for (int w = 0; w <= qmax; ++w) {
		for_each_k_regular(w, k, [&](const Partition& p) {
			if (p.length() <= xmax) out.add_to_coeff(p.length(), w, 1);
		});
	}
	return out;
}

namespace {

/* Picks strictly increasing sizes for positions pos .. s-1; the weight used
 * so far plus the cheapest possible completion prunes the recursion. */
void profile_rec(const std::vector<int>& word, long long max_weight, std::size_t pos,
                 int min_size, long long weight, std::vector<int>& sizes,
                 const std::function<void(const Partition&)>& fn) {
	if (pos == word.size()) {
		std::vector<int> parts;
		for (std::size_t i = 0; i < sizes.size(); ++i)
			parts.insert(parts.end(), word[i], sizes[i]);
		fn(Partition(std::move(parts)));
		return;
	}
	for (int size = min_size;; ++size) {
		/* Cheapest completion: sizes size, size+1, ... for the remaining slots. */
		long long completion = 0;
		for (std::size_t j = pos; j < word.size(); ++j)
			completion += static_cast<long long>(word[j]) * (size + static_cast<long long>(j - pos));
		if (weight + completion > max_weight) break;
		sizes.push_back(size);
		profile_rec(word, max_weight, pos + 1, size + 1,
		            weight + static_cast<long long>(word[pos]) * size, sizes, fn);
		sizes.pop_back();
	}
}

}  // namespace

void for_each_with_profile(const std::vector<int>& word, long long max_weight,
                           const std::function<void(const Partition&)>& fn) {
	for (int m : word)
		if (m < 1) throw std::invalid_argument("for_each_with_profile: multiplicities must be >= 1");
	if (word.empty()) {
		if (max_weight >= 0) fn(Partition());
		return;
	}
	std::vector<int> sizes;
	profile_rec(word, max_weight, 0, 1, 0, sizes, fn);
}

}  // namespace qreg
