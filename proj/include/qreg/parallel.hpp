#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace qreg {

/* Runs fn(i) for every i in [0, n) on up to `threads` workers (<= 1 means
 * serial).  Work items must write only to their own output slots; callers
 * reduce the slots afterwards in index order, so results do not depend on
 * the schedule. */
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t)>& fn) {
	unsigned hw = std::thread::hardware_concurrency();
	if (hw == 0) hw = 1;
	std::size_t workers = static_cast<std::size_t>(threads < 1 ? 1 : threads);
	workers = std::min<std::size_t>({workers, hw, n});
	if (workers <= 1) {
		for (std::size_t i = 0; i < n; ++i) fn(i);
		return;
	}

	std::atomic<std::size_t> next{0};
	std::exception_ptr error;
	std::mutex error_mutex;
	auto body = [&] {
		for (;;) {
			std::size_t i = next.fetch_add(1);
			if (i >= n) return;
			try {
				fn(i);
			} catch (...) {
				std::lock_guard<std::mutex> lock(error_mutex);
				if (!error) error = std::current_exception();
				return;
			}
		}
	};

	std::vector<std::thread> pool;
	for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
	body();
	for (auto& t : pool) t.join();
	if (error) std::rethrow_exception(error);
}

}  // namespace qreg
