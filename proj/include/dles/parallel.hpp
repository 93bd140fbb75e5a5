#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace dles {

/// Worker count for the image kernels; 0 selects std::thread::hardware_concurrency().
void set_worker_threads(unsigned count);
unsigned worker_threads();

/// Run body(i) for i in [0, n) across worker threads. Each i is processed exactly once
/// and the body must only write state owned by i, so results never depend on scheduling.
template <typename Body>
void parallel_for(std::size_t n, Body&& body) {
    const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(worker_threads(), n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < n; i = next++) body(i);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace dles
