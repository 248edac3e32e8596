#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace steiner {

// Splits [0, total) into `jobs` contiguous chunks and runs
// fn(chunk_index, begin, end) on each, in parallel for jobs > 1.
// Chunk boundaries depend only on (total, jobs), so any aggregation that is
// order-independent is reproducible across runs.
inline void run_chunks(
    std::uint64_t total, int jobs,
    const std::function<void(int, std::uint64_t, std::uint64_t)>& fn) {
  if (jobs < 1) jobs = 1;
  if (static_cast<std::uint64_t>(jobs) > total && total > 0)
    jobs = static_cast<int>(total);
  if (total == 0) return;
  if (jobs == 1) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  const std::uint64_t base = total / jobs, extra = total % jobs;
  std::uint64_t begin = 0;
  for (int c = 0; c < jobs; ++c) {
    const std::uint64_t len = base + (static_cast<std::uint64_t>(c) < extra);
    const std::uint64_t end = begin + len;
    pool.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
    begin = end;
  }
  for (auto& th : pool) th.join();
}

}  // namespace steiner
