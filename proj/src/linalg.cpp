#include "bott/linalg.hpp"

#include <algorithm>
#include <limits>

namespace bott {

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m[r][c]) == 0) continue;
      const Rational factor = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= factor * m[c][k];
    }
  }
  return det;
}

Integer bareiss_determinant(IntegerMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::size_t rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      const Rational factor = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= factor * m[r][k];
    }
    ++r;
  }
  return r;
}

Rational minor(const RationalMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  RationalMatrix sub(rows.size(), std::vector<Rational>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) sub[i][j] = m[rows[i]][cols[j]];
  }
  return determinant(std::move(sub));
}

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

/// Determinantal divisor of order r, represented as an associate class:
/// over Z the nonnegative gcd, over Z_(2) the power 2^v with v the minimal
/// valuation. Returns 0 when every r x r minor vanishes.
Rational determinantal_divisor(const RationalMatrix& m, std::size_t r, CoeffRing ring) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  if (r == 0) return 1;
  const auto row_sets = subsets_of_size(rows, r);
  const auto col_sets = subsets_of_size(cols, r);
  if (ring == CoeffRing::TwoLocalZ) {
    long best = std::numeric_limits<long>::max();
    for (const auto& rs : row_sets) {
      for (const auto& cs : col_sets) {
        const Rational d = minor(m, rs, cs);
        if (sgn(d) != 0) best = std::min(best, two_adic_valuation(d));
      }
    }
    if (best == std::numeric_limits<long>::max()) return 0;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(best));
    return Rational(p);
  }
  Integer g = 0;
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      const Rational d = minor(m, rs, cs);
      g = gcd(g, Integer(d.get_num()));
      if (g == 1) return 1;
    }
  }
  return Rational(g);
}

}  // namespace

bool extendable_to_unimodular(const RationalMatrix& rows, CoeffRing ring) {
  if (rows.empty()) return true;
  for (const auto& r : rows) {
    for (const auto& v : r) {
      if (!in_ring(v, ring)) return false;
    }
  }
  const std::size_t k = rows.size();
  if (ring == CoeffRing::RationalQ) return rank(rows) == k;
  return determinantal_divisor(rows, k, ring) == 1;
}

bool solvable_in_ring(const RationalMatrix& a, const std::vector<Rational>& b, CoeffRing ring) {
  const std::size_t rows = a.size();
  if (rows != b.size()) throw DomainError("solvable_in_ring: dimension mismatch");
  const std::size_t cols = rows ? a[0].size() : 0;
  if (cols == 0) {
    return std::all_of(b.begin(), b.end(), [](const Rational& v) { return sgn(v) == 0; });
  }
  RationalMatrix augmented = a;
  for (std::size_t i = 0; i < rows; ++i) augmented[i].push_back(b[i]);
  const std::size_t r = rank(a);
  if (rank(augmented) != r) return false;
  if (ring == CoeffRing::RationalQ) return true;
  for (const auto& row : augmented) {
    for (const auto& v : row) {
      if (!in_ring(v, ring)) throw DomainError("solvable_in_ring: coefficient outside the ring");
    }
  }
  return determinantal_divisor(a, r, ring) == determinantal_divisor(augmented, r, ring);
}

}  // namespace bott

namespace bott {

namespace {

// Column operations on a (rows x cols) while mirroring them on v (cols x cols).
void swap_columns(RationalMatrix& a, RationalMatrix& v, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (auto& row : a) std::swap(row[c1], row[c2]);
  for (auto& row : v) std::swap(row[c1], row[c2]);
}

void subtract_column(RationalMatrix& a, RationalMatrix& v, std::size_t target, std::size_t source,
                     const Rational& factor) {
  for (auto& row : a) row[target] -= factor * row[source];
  for (auto& row : v) row[target] -= factor * row[source];
}

}  // namespace

std::optional<std::vector<Rational>> solve_in_ring(const RationalMatrix& a_in, const std::vector<Rational>& b,
                                                   CoeffRing ring) {
  const std::size_t rows = a_in.size();
  if (rows != b.size()) throw DomainError("solve_in_ring: dimension mismatch");
  const std::size_t cols = rows ? a_in[0].size() : 0;
  for (const auto& row : a_in) {
    for (const auto& x : row) {
      if (!in_ring(x, ring)) throw DomainError("solve_in_ring: coefficient outside the ring");
    }
  }
  RationalMatrix a = a_in;
  RationalMatrix v(cols, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;

  std::vector<std::size_t> pivot_rows;
  std::size_t c = 0;
  for (std::size_t i = 0; i < rows && c < cols; ++i) {
    if (ring == CoeffRing::IntegerZ) {
      // Euclid on row i across columns c..cols-1.
      while (true) {
        std::size_t best = cols;
        for (std::size_t j = c; j < cols; ++j) {
          if (sgn(a[i][j]) != 0 && (best == cols || abs(a[i][j]) < abs(a[i][best]))) best = j;
        }
        if (best == cols) break;
        swap_columns(a, v, c, best);
        bool done = true;
        for (std::size_t j = c + 1; j < cols; ++j) {
          if (sgn(a[i][j]) == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_num_mpz_t(), a[i][c].get_num_mpz_t());
          subtract_column(a, v, j, c, Rational(q));
          if (sgn(a[i][j]) != 0) done = false;
        }
        if (done) break;
      }
    } else {
      std::size_t best = cols;
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(a[i][j]) == 0) continue;
        if (best == cols ||
            (ring == CoeffRing::TwoLocalZ && two_adic_valuation(a[i][j]) < two_adic_valuation(a[i][best]))) {
          best = j;
        }
      }
      if (best != cols) {
        swap_columns(a, v, c, best);
        for (std::size_t j = c + 1; j < cols; ++j) {
          if (sgn(a[i][j]) != 0) subtract_column(a, v, j, c, a[i][j] / a[i][c]);
        }
      }
    }
    if (sgn(a[i][c]) == 0) continue;
    pivot_rows.push_back(i);
    ++c;
  }

  std::vector<Rational> e(cols);
  for (std::size_t t = 0; t < pivot_rows.size(); ++t) {
    const std::size_t p = pivot_rows[t];
    Rational rest = b[p];
    for (std::size_t s = 0; s < t; ++s) rest -= a[p][s] * e[s];
    e[t] = rest / a[p][t];
    if (!in_ring(e[t], ring)) return std::nullopt;
  }
  for (std::size_t i = 0; i < rows; ++i) {
    Rational lhs = 0;
    for (std::size_t s = 0; s < cols; ++s) lhs += a[i][s] * e[s];
    if (lhs != b[i]) return std::nullopt;
  }
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t s = 0; s < cols; ++s) x[i] += v[i][s] * e[s];
  }
  return x;
}

}  // namespace bott
