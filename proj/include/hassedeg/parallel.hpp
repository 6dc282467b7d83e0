#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "hassedeg/permutation.hpp"

namespace hassedeg {

// 0 means "use hardware concurrency".
inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Evaluates fn(block) for block in [0, blocks) on up to `jobs` threads and
// returns the results indexed by block. The partition into blocks is chosen
// by the caller, so results never depend on the thread count.
template <class T, class Fn>
std::vector<T> map_blocks(std::size_t blocks, int jobs, Fn&& fn) {
  std::vector<T> results(blocks);
  const int workers = std::min<int>(resolve_jobs(jobs), static_cast<int>(std::max<std::size_t>(blocks, 1)));
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) results[b] = fn(b);
    return results;
  }
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t b = cursor.fetch_add(1);
        if (b >= blocks) return;
        try {
          results[b] = fn(b);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          cursor.store(blocks);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

// Splits S_n into fixed lexicographic rank ranges, maps each range with
// `map(begin, end)`, and folds the partial results in rank order with
// `merge(accumulator, partial)`.
template <class T, class Map, class Merge>
T reduce_over_ranks(int n, int jobs, T init, Map&& map, Merge&& merge) {
  const std::uint64_t total = factorial(n);
  const std::uint64_t width = (total + 255) / 256;
  const std::uint64_t chunks = (total + width - 1) / width;
  auto partials = map_blocks<T>(static_cast<std::size_t>(chunks), jobs, [&](std::size_t c) {
    const std::uint64_t begin = c * width;
    const std::uint64_t end = std::min(total, begin + width);
    return map(begin, end);
  });
  for (auto& part : partials) merge(init, std::move(part));
  return init;
}

}  // namespace hassedeg
