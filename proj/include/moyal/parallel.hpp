#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace moyal {

// Process-wide default worker count (CLI --threads). Results are identical
// for any thread count: workers write disjoint ranges, reductions stay
// single-threaded.
int default_threads();
void set_default_threads(int n);

template <class F>
void parallel_for(std::size_t n, F&& body, int nthreads = 0) {
    if (nthreads <= 0) nthreads = default_threads();
    if (nthreads <= 1 || n < 2) {
        body(std::size_t(0), n);
        return;
    }
    std::size_t chunks = std::min<std::size_t>(nthreads, n);
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    std::size_t base = n / chunks, rem = n % chunks, begin = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
        std::size_t len = base + (c < rem ? 1 : 0);
        std::size_t b = begin, e = begin + len;
        begin = e;
        pool.emplace_back([&body, b, e] { body(b, e); });
    }
    for (auto& t : pool) t.join();
}

} // namespace moyal
