#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace pgrank {

/// Worker count: hardware concurrency, capped by the PGRANK_THREADS
/// environment variable when set.
inline unsigned worker_count() {
    unsigned n = std::thread::hardware_concurrency();
    if (n == 0) n = 1;
    if (const char* env = std::getenv("PGRANK_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned long>(cap) < n) n = unsigned(cap);
    }
    return n;
}

/// Splits [0, count) into contiguous chunks, one worker thread per chunk.
/// fn(begin, end) must only touch state disjoint across chunks.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const std::size_t grain = 256;
    const unsigned workers =
        unsigned(std::min<std::size_t>(worker_count(), std::max<std::size_t>(1, count / grain)));
    if (workers <= 1 || count == 0) {
        fn(std::size_t(0), count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = std::size_t(w) * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace pgrank
