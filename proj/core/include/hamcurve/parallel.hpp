#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace hamcurve {

/// 0 means "available parallelism".
inline unsigned resolve_workers(unsigned workers) {
  if (workers == 0) workers = std::thread::hardware_concurrency();
  return workers == 0 ? 1 : workers;
}

/// Runs f(i) for i in [0, n) on a bounded pool. Each index is handled exactly
/// once; callers write to disjoint slots, so results do not depend on the
/// worker count. The exception of the lowest failing index is rethrown.
template <class F>
void parallel_for(std::size_t n, unsigned workers, F&& f) {
  const std::size_t pool = std::min<std::size_t>(resolve_workers(workers), n);
  if (pool <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_at = n;
  std::exception_ptr error;
  auto run = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (i < failed_at) {
          failed_at = i;
          error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(pool - 1);
  for (std::size_t k = 1; k < pool; ++k) threads.emplace_back(run);
  run();
  for (auto& th : threads) th.join();
  if (error) std::rethrow_exception(error);
}

/// Index-ordered results of f(i).
template <class F>
auto parallel_map(std::size_t n, unsigned workers, F&& f) {
  using R = std::decay_t<decltype(f(std::size_t{0}))>;
  std::vector<R> out(n);
  parallel_for(n, workers, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

}  // namespace hamcurve
