#include "bott/quasitoric.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

#include "bott/ring.hpp"

namespace bott {

CharMatrix CharMatrix::from_rows(const IntegerMatrix& rows) {
  const std::size_t n = rows.size();
  CharMatrix out;
  out.m_ = rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw DomainError("characteristic matrix must be square");
    if (rows[i][i] == -1) {
      for (auto& x : out.m_[i]) x = -x;
    } else if (rows[i][i] != 1) {
      throw DomainError("diagonal entry (" + std::to_string(i + 1) + "," + std::to_string(i + 1) +
                        ") must be 1 or -1");
    }
  }
  return out;
}

CharMatrix CharMatrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
  IntegerMatrix m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return from_rows(m);
}

std::vector<Integer> principal_minors(const IntegerMatrix& m, Execution exec) {
  const std::size_t n = m.size();
  if (n > 20) throw DomainError("principal minor enumeration supports n <= 20");
  const std::size_t count = std::size_t{1} << n;
  return kernels::map_indices<Integer>(
      count,
      [&](std::size_t mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask >> i & 1) idx.push_back(i);
        }
        IntegerMatrix sub(idx.size(), std::vector<Integer>(idx.size()));
        for (std::size_t a = 0; a < idx.size(); ++a) {
          for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = m[idx[a]][idx[b]];
        }
        return bareiss_determinant(std::move(sub));
      },
      exec);
}

bool validate_characteristic(const CharMatrix& m, Execution exec) {
  const auto minors = principal_minors(m.rows(), exec);
  return std::all_of(minors.begin(), minors.end(), [](const Integer& d) { return d == 1 || d == -1; });
}

namespace {

std::vector<std::size_t> find_cycle(const CharMatrix& m, const std::vector<bool>& remaining) {
  const std::size_t n = m.size();
  // Every remaining vertex has an incoming edge from a remaining vertex;
  // walking backwards must revisit a vertex.
  std::size_t start = 0;
  while (!remaining[start]) ++start;
  std::vector<std::size_t> seen_at(n, n);
  std::vector<std::size_t> walk;
  std::size_t v = start;
  while (seen_at[v] == n) {
    seen_at[v] = walk.size();
    walk.push_back(v);
    std::size_t pred = n;
    for (std::size_t u = 0; u < n; ++u) {
      if (u != v && remaining[u] && m(u, v) != 0) {
        pred = u;
        break;
      }
    }
    v = pred;
  }
  std::vector<std::size_t> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[v]), walk.end());
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace

BottRecognition is_bott(const CharMatrix& m) {
  const std::size_t n = m.size();
  if (!validate_characteristic(m)) throw DomainError("not a characteristic matrix: some principal minor is not +-1");
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && m(i, j) != 0) ++indegree[j];
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t j = 0; j < n; ++j) {
    if (indegree[j] == 0) ready.push(j);
  }
  std::vector<std::size_t> order;
  std::vector<bool> remaining(n, true);
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    remaining[v] = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != v && m(v, j) != 0 && --indegree[j] == 0) ready.push(j);
    }
  }
  BottRecognition out;
  if (order.size() < n) {
    out.cycle = find_cycle(m, remaining);
    return out;
  }
  out.is_bott = true;
  out.sigma = StagePermutation::from_order(order);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (m(i, j) * m(j, i) != 0) throw std::logic_error("accepted matrix has M[i][j] M[j][i] != 0");
    }
  }
  const auto minors = principal_minors(m.rows());
  if (!std::all_of(minors.begin(), minors.end(), [](const Integer& d) { return d == 1; })) {
    throw std::logic_error("accepted matrix has a principal minor different from +1");
  }
  return out;
}

BottMatrix to_bott_matrix(const CharMatrix& m, const StagePermutation& sigma) {
  const std::size_t n = m.size();
  if (sigma.size() != n) throw DomainError("permutation size differs from matrix size");
  BottMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || m(i, j) == 0) continue;
      if (sigma(i) >= sigma(j)) throw DomainError("permutation does not make the matrix upper triangular");
      out.set(sigma(i), sigma(j), Rational(m(i, j)));
    }
  }
  return out;
}

CharMatrix from_bott_matrix(const BottMatrix& lambda) {
  if (!lambda.is_integral()) throw DomainError("characteristic matrices need integral entries");
  const std::size_t n = lambda.size();
  IntegerMatrix rows(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    rows[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) rows[i][j] = lambda(i, j).get_num();
  }
  return CharMatrix::from_rows(rows);
}

bool bq_structure_check(const BottMatrix& lambda) {
  const auto h = CohomologyRing::create(lambda);
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    const RingElement x = h->generator(k);
    std::vector<Rational> f_coeffs = lambda.column(k);
    f_coeffs.resize(lambda.size());
    const RingElement f = h->line(LineClass(f_coeffs));
    if (!(x * x == f * x)) return false;
  }
  return h->top_class_nonzero();
}

IntegerMatrix cyclic_matrix(const std::vector<Integer>& h) {
  const std::size_t k = h.size();
  IntegerMatrix m(k, std::vector<Integer>(k, 0));
  for (std::size_t i = 0; i < k; ++i) m[i][i] = 1;
  for (std::size_t i = 0; i < k; ++i) m[i][(i + 1) % k] += h[i];
  return m;
}

Integer cyclic_minor(const std::vector<Integer>& h) {
  if (h.size() < 2) throw DomainError("a cycle needs at least two entries");
  Integer prod = 1;
  for (const auto& x : h) prod *= x;
  return h.size() % 2 == 0 ? Integer(1 - prod) : Integer(1 + prod);
}

}  // namespace bott
