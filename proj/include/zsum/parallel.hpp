#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace zsum {

/// Runs fn(i) for i in [0, count) on up to `workers` threads. Indices are
/// partitioned into contiguous blocks, so callers that write results into
/// index-addressed slots get a deterministic outcome regardless of thread
/// scheduling. The first exception (by block order) is rethrown after join.
template <typename Fn>
inline void parallel_for_index(std::size_t count, int workers, Fn&& fn) {
    if (count == 0) return;
    const std::size_t nthreads =
        std::min<std::size_t>(count, workers <= 1 ? 1 : static_cast<std::size_t>(workers));
    if (nthreads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    const std::size_t chunk = (count + nthreads - 1) / nthreads;
    for (std::size_t b = 0; b < nthreads; ++b) {
        const std::size_t lo = b * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        threads.emplace_back([&, b, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errors[b] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace zsum
