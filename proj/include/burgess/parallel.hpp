#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

#include "burgess/common.hpp"

namespace burgess {

// Runs fn(i) for i in [0, n). Tasks must be independent, must not throw,
// and must write results into caller-owned per-index slots; the caller
// reduces those slots in index order, so output is identical for any
// job count.
inline void parallel_tasks(u64 n, int jobs, const std::function<void(u64)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (u64 i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<u64> next{0};
  auto worker = [&] {
    for (u64 i; (i = next.fetch_add(1)) < n;) fn(i);
  };
  std::vector<std::thread> pool;
  u64 nthreads = std::min<u64>(static_cast<u64>(jobs), n);
  pool.reserve(nthreads);
  for (u64 t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace burgess
