#pragma once

// Minimal data-parallel loop: shared-nothing chunks over [0, count).

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cellweb {

inline int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)hw : 1;
}

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    int t = resolve_threads(threads);
    if (t <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mutex;
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (int k = 0; k < t; ++k) {
        pool.emplace_back([&] {
            try {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= count) break;
                    fn(i);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

} // namespace cellweb
