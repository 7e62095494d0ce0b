#pragma once

#include <atomic>
#include <cstddef>
#include <vector>

#include <omp.h>

namespace bott {

/// Serial is the reference path; Parallel must produce identical results.
enum class Execution { Serial, Parallel };

namespace kernels {

/// Smallest i in [0, count) with pred(i), or count when none matches.
/// The parallel form still returns the smallest index: threads skip work
/// beyond the best index found so far.
template <class Pred>
std::size_t first_match(std::size_t count, Pred&& pred, Execution exec) {
  if (exec == Execution::Serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return count;
  }
  std::atomic<std::size_t> best{count};
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(count); ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (i >= best.load(std::memory_order_relaxed)) continue;
    if (pred(i)) {
      std::size_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }
  return best.load();
}

/// out[i] = f(i) for every i.
template <class T, class F>
std::vector<T> map_indices(std::size_t count, F&& f, Execution exec) {
  std::vector<T> out(count);
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(count); ++k) {
    out[static_cast<std::size_t>(k)] = f(static_cast<std::size_t>(k));
  }
  return out;
}

/// Upper triangle of a symmetric relation: rel[i][j] for i < j.
template <class Rel>
std::vector<std::vector<char>> pairwise(std::size_t count, Rel&& rel, Execution exec) {
  std::vector<std::vector<char>> out(count, std::vector<char>(count, 0));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(count * (count > 0 ? count - 1 : 0) / 2);
  for (std::size_t j = 0; j < count; ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  const auto flags = map_indices<char>(
      pairs.size(), [&](std::size_t k) { return static_cast<char>(rel(pairs[k].first, pairs[k].second) ? 1 : 0); },
      exec);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    out[pairs[k].first][pairs[k].second] = flags[k];
    out[pairs[k].second][pairs[k].first] = flags[k];
  }
  return out;
}

}  // namespace kernels

/// Applies an explicit thread count (0 keeps the OpenMP default).
inline void set_thread_count(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

}  // namespace bott
