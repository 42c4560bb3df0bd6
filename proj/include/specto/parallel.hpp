#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace specto {

inline int default_thread_count() {
    if (const char* env = std::getenv("SPECTO_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Index-parallel loop. Each index writes only its own slot, so any later
// reduction done in index order is independent of the thread count.
inline void parallel_for_index(std::size_t n, int threads, const std::function<void(std::size_t)>& body) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    int use = threads;
    if (static_cast<std::size_t>(use) > n) use = static_cast<int>(n);
    pool.reserve(static_cast<std::size_t>(use));
    for (int t = 0; t < use; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

} // namespace specto
