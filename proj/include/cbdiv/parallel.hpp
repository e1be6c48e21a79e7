/*
  parallel.hpp

  Index-based parallel for.  Work items write to disjoint slots, so
  results never depend on the thread count; all reductions downstream
  are exact integer arithmetic.
*/

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace cbdiv {

inline int& default_thread_count() {
    static int count = 0; // 0 = hardware concurrency
    return count;
}

template <class F>
void parallel_for(std::size_t n, F&& fn, int threads = 0) {
    if (threads <= 0) threads = default_thread_count();
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mtx;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mtx);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    std::size_t pool_size = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    pool.reserve(pool_size);
    for (std::size_t t = 0; t < pool_size; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace cbdiv
