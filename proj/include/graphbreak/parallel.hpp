#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace graphbreak {

// Worker cap: min(hardware_concurrency, GRAPHBREAK_THREADS if set).
inline int worker_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (const char* env = std::getenv("GRAPHBREAK_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

// Static-partition parallel loop. Each worker owns a contiguous index
// range, so results are identical regardless of the thread count as long
// as the body writes disjoint slots.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& body) {
    const int workers = worker_count();
    if (workers <= 1 || count < 256) {
        body(std::size_t{0}, count);
        return;
    }
    const std::size_t chunk = (count + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        const std::size_t lo = std::min(count, static_cast<std::size_t>(w) * chunk);
        const std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace graphbreak
