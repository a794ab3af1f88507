#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace sekine {

/// Worker cap for the embarrassingly parallel sweeps. Honors the
/// SEKINE_THREADS environment variable; defaults to the hardware count,
/// clamped to 8.
inline int worker_count() {
    if (const char* env = std::getenv("SEKINE_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

/// Runs body(i) for i in [0, n). Bodies must write only to disjoint slots.
template <typename F>
void parallel_for(std::size_t n, F&& body) {
    const int workers = std::min<std::size_t>(worker_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                body(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace sekine
