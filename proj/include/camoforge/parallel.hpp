#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace camoforge {

/// Worker count: CAMOFORGE_THREADS if set (min 1), else hardware concurrency.
inline unsigned thread_count() {
  if (const char* env = std::getenv("CAMOFORGE_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Runs fn(i) for i in [0, n). Iterations are sharded over threads by
/// index; callers keep determinism by writing only to slot i of
/// pre-sized storage. Results are identical at any thread count.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = thread_count();
  if (n == 0) return;
  if (workers <= 1 || n == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t stride = workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += stride) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

} // namespace camoforge
