#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "monocat/report.hpp"

namespace monocat::detail {

inline unsigned worker_count(std::uint64_t n, std::uint64_t work_per_item = 1) {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  // below ~64k operations in total the thread spawn overhead dominates
  const std::uint64_t min_chunk = 1 << 16;
  const std::uint64_t total = n * std::max<std::uint64_t>(work_per_item, 1);
  const std::uint64_t want = (total + min_chunk - 1) / min_chunk;
  return static_cast<unsigned>(std::min<std::uint64_t>(
      std::min<std::uint64_t>(hw, n), std::max<std::uint64_t>(want, 1)));
}

/// Runs chunk(begin, end) over a partition of [0, n) on worker threads and
/// returns the violation of the lowest chunk that found one. Each chunk scans
/// in index order, so the merged result is the first violation in the global
/// scan order regardless of thread timing. work_per_item sizes the per-index
/// inner work so short outer loops still parallelize.
template <typename Chunk>
std::optional<Violation> parallel_first_violation(std::uint64_t n, Chunk chunk,
                                                  std::uint64_t work_per_item = 1) {
  const unsigned workers = worker_count(n, work_per_item);
  if (workers <= 1) return chunk(0, n);

  std::vector<std::optional<Violation>> results(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  const std::uint64_t per = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = per * w;
    const std::uint64_t end = std::min(n, begin + per);
    threads.emplace_back([&, w, begin, end] {
      if (begin < end) results[w] = chunk(begin, end);
    });
  }
  for (auto& t : threads) t.join();
  for (auto& r : results)
    if (r) return r;
  return std::nullopt;
}

}  // namespace monocat::detail
