#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace torusweil {

// Worker cap: TORUS_WEIL_THREADS if set, else hardware concurrency.
inline int worker_count() {
  if (const char* env = std::getenv("TORUS_WEIL_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

// Runs fn(i) for i in [0, count) on a bounded pool. Results are whatever fn
// writes into caller-owned slots, so output ordering is index-determined.
inline void parallel_for(size_t count, const std::function<void(size_t)>& fn,
                         int max_threads = 0) {
  int workers = max_threads > 0 ? max_threads : worker_count();
  if (workers <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  int spawn = int(std::min<size_t>(size_t(workers), count));
  for (int w = 0; w < spawn; ++w) {
    pool.emplace_back([&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace torusweil
