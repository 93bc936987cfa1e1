#pragma once

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace cycperm::detail {

inline unsigned worker_count() { return std::max(1u, std::thread::hardware_concurrency()); }

// Runs task(i) for every i in [0, count) on a small thread pool. Tasks must
// write only to their own slots so that results do not depend on scheduling.
template <typename Task>
void parallel_for(std::size_t count, Task task) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) task(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace cycperm::detail
