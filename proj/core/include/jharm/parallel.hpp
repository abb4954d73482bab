#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace jharm {

// Worker cap shared by every parallel loop in the library. Results are
// bitwise independent of the cap: loops only ever write disjoint slots.
inline std::atomic<int>& worker_cap() {
  static std::atomic<int> cap{[] {
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(8u, hw ? hw : 1u));
  }()};
  return cap;
}

inline void set_worker_count(int n) { worker_cap().store(n < 1 ? 1 : n); }
inline int worker_count() { return worker_cap().load(); }

// Runs body(i) for i in [0, n). Contiguous chunking; each index is handled
// exactly once by exactly one thread. The lowest-index exception wins.
template <class F>
void parallel_for(std::size_t n, F&& body) {
  const int workers = std::min<std::size_t>(static_cast<std::size_t>(worker_count()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errs(workers);
  std::vector<std::size_t> err_at(workers, static_cast<std::size_t>(-1));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t lo = n * w / workers;
      const std::size_t hi = n * (w + 1) / workers;
      for (std::size_t i = lo; i < hi; ++i) {
        try {
          body(i);
        } catch (...) {
          errs[w] = std::current_exception();
          err_at[w] = i;
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  std::exception_ptr first;
  std::size_t first_at = static_cast<std::size_t>(-1);
  for (int w = 0; w < workers; ++w)
    if (errs[w] && err_at[w] < first_at) {
      first = errs[w];
      first_at = err_at[w];
    }
  if (first) std::rethrow_exception(first);
}

}  // namespace jharm
