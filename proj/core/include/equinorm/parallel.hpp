#pragma once

// Deterministic fork-join helper: results land in index order regardless of
// scheduling, so parallel and serial runs produce identical output.

#include <algorithm>
#include <future>
#include <thread>
#include <vector>

namespace equinorm {

/// Applies fn(i) for i in [0, n) across std::async tasks; result slot i is
/// always fn(i).  Exceptions from any task propagate to the caller.
template <typename Fn>
auto parallel_map(int n, Fn&& fn, bool parallel = true)
    -> std::vector<decltype(fn(0))> {
  using Result = decltype(fn(0));
  std::vector<Result> results(static_cast<std::size_t>(n));
  if (n <= 0) return results;

  unsigned hw = std::thread::hardware_concurrency();
  int n_workers = parallel ? static_cast<int>(std::max(1u, hw)) : 1;
  n_workers = std::min(n_workers, n);
  if (n_workers <= 1) {
    for (int i = 0; i < n; ++i) results[static_cast<std::size_t>(i)] = fn(i);
    return results;
  }

  std::vector<std::future<void>> tasks;
  tasks.reserve(static_cast<std::size_t>(n_workers));
  for (int w = 0; w < n_workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&, w] {
      for (int i = w; i < n; i += n_workers) {
        results[static_cast<std::size_t>(i)] = fn(i);
      }
    }));
  }
  for (auto& t : tasks) t.get();
  return results;
}

}  // namespace equinorm
