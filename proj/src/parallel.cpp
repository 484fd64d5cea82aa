#include "moyal/parallel.hpp"

#include <atomic>

namespace moyal {

namespace {
std::atomic<int> g_threads{1};
}

int default_threads() { return g_threads.load(std::memory_order_relaxed); }

void set_default_threads(int n) { g_threads.store(n < 1 ? 1 : n, std::memory_order_relaxed); }

} // namespace moyal
