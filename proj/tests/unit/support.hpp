#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/linalg.hpp"
#include "bott/tower_moves.hpp"

namespace bott::testing {

inline std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed * 0x9E3779B97F4A7C15ULL + 17); }

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline BottMatrix random_bott(std::mt19937_64& rng, std::size_t n, long bound) {
  BottMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) m.set(i, j, Rational(uniform(rng, -bound, bound)));
  }
  return m;
}

/// Bott matrix with each entry zero with probability 1/2, so that
/// conjugations and trivial stages actually occur.
inline BottMatrix random_sparse_bott(std::mt19937_64& rng, std::size_t n, long bound) {
  BottMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (uniform(rng, 0, 1) == 0) m.set(i, j, Rational(uniform(rng, -bound, bound)));
    }
  }
  return m;
}

/// Every n x n strictly upper triangular matrix with entries in [-bound, bound].
inline std::vector<BottMatrix> all_bott(std::size_t n, long bound) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) slots.emplace_back(i, j);
  }
  std::vector<BottMatrix> out;
  std::vector<long> digits(slots.size(), -bound);
  while (true) {
    BottMatrix m(n);
    for (std::size_t s = 0; s < slots.size(); ++s) m.set(slots[s].first, slots[s].second, Rational(digits[s]));
    out.push_back(m);
    std::size_t s = 0;
    while (s < digits.size() && digits[s] == bound) digits[s++] = -bound;
    if (s == digits.size()) break;
    ++digits[s];
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Leibniz expansion; independent of every elimination routine.
inline Integer leibniz_determinant(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  Integer total = 0;
  for (const auto& p : all_permutations(n)) {
    Integer term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][p[i]];
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    }
    total += inversions % 2 ? Integer(-term) : term;
  }
  return total;
}

}  // namespace bott::testing
