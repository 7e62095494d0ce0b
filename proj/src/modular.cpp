#include "bott/modular.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bott/ring.hpp"

namespace bott::modular {

namespace {

long norm(long x, long m) {
  x %= m;
  return x < 0 ? x + m : x;
}

long inverse(long u, long m) {
  for (long v = 1; v < m; ++v) {
    if ((u * v) % m == 1) return v;
  }
  throw DomainError("residue " + std::to_string(u) + " is not invertible mod " + std::to_string(m));
}

long power(long base, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Vectors in (Z/m)^n indexed by their base-m expansion, first coordinate
// most significant.
Residues decode(std::size_t index, std::size_t n, long m) {
  Residues v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<long>(index % static_cast<std::size_t>(m));
    index /= static_cast<std::size_t>(m);
  }
  return v;
}

std::size_t encode(const Residues& v, long m) {
  std::size_t index = 0;
  for (long x : v) index = index * static_cast<std::size_t>(m) + static_cast<std::size_t>(x);
  return index;
}

bool is_zero(const Residues& v) {
  return std::all_of(v.begin(), v.end(), [](long x) { return x == 0; });
}

// Incremental row echelon form over F_p for independence tests.
class EchelonModP {
 public:
  EchelonModP(long p, std::size_t n) : p_(p), n_(n) {}

  // Adds v reduced mod p; false (and no change) when dependent.
  bool push(const Residues& v) {
    Residues r(n_);
    for (std::size_t i = 0; i < n_; ++i) r[i] = v[i] % p_;
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const std::size_t piv = pivots_[b];
      if (r[piv] == 0) continue;
      const long f = r[piv];
      for (std::size_t i = 0; i < n_; ++i) r[i] = norm(r[i] - f * basis_[b][i], p_);
    }
    std::size_t piv = 0;
    while (piv < n_ && r[piv] == 0) ++piv;
    if (piv == n_) return false;
    const long inv = inverse(r[piv], p_);
    for (auto& x : r) x = (x * inv) % p_;
    basis_.push_back(std::move(r));
    pivots_.push_back(piv);
    return true;
  }

  void pop() {
    basis_.pop_back();
    pivots_.pop_back();
  }

 private:
  long p_;
  std::size_t n_;
  std::vector<Residues> basis_;
  std::vector<std::size_t> pivots_;
};

struct Space {
  std::vector<Residues> vectors;
  std::vector<Residues> squares;
};

Space all_nonzero(const Tower& t) {
  Space s;
  std::size_t total = 1;
  for (std::size_t i = 0; i < t.n; ++i) total *= static_cast<std::size_t>(t.m);
  for (std::size_t idx = 1; idx < total; ++idx) {
    s.vectors.push_back(decode(idx, t.n, t.m));
    s.squares.push_back(square(t, s.vectors.back()));
  }
  return s;
}

class IsoSearch {
 public:
  IsoSearch(const Tower& a, const Tower& b, const Space& space, std::size_t budget)
      : a_(a), b_(b), space_(space), budget_(budget), echelon_(a.p, a.n) {}

  std::optional<bool> run() {
    const bool found = dfs(0);
    if (found) return true;
    if (exhausted_) return std::nullopt;
    return false;
  }

 private:
  bool dfs(std::size_t k) {
    const std::size_t n = a_.n;
    if (k == n) return true;
    Residues g(n, 0);
    for (std::size_t i = 0; i < k; ++i) {
      const long coeff = b_(i, k);
      if (coeff == 0) continue;
      for (std::size_t j = 0; j < n; ++j) g[j] = (g[j] + coeff * rows_[i][j]) % a_.m;
    }
    const bool g_zero = is_zero(g);
    for (std::size_t idx = 0; idx < space_.vectors.size(); ++idx) {
      if (++checks_ > budget_) {
        exhausted_ = true;
        return false;
      }
      const Residues& v = space_.vectors[idx];
      if (g_zero ? !is_zero(space_.squares[idx]) : product(a_, g, v) != space_.squares[idx]) continue;
      if (!echelon_.push(v)) continue;
      rows_.push_back(v);
      if (dfs(k + 1)) return true;
      rows_.pop_back();
      echelon_.pop();
      if (exhausted_) return false;
    }
    return false;
  }

  const Tower& a_;
  const Tower& b_;
  const Space& space_;
  std::size_t budget_;
  std::size_t checks_ = 0;
  bool exhausted_ = false;
  EchelonModP echelon_;
  std::vector<Residues> rows_;
};

class ComplexitySearch {
 public:
  ComplexitySearch(const Tower& t, const std::vector<Residues>& canon, const std::vector<Residues>& canon_squares,
                   std::size_t budget)
      : t_(t), canon_(canon), squares_(canon_squares), budget_(budget), echelon_(t.p, t.n) {
    for (std::size_t i = 0; i < canon_.size(); ++i) {
      if (is_zero(squares_[i])) square_zero_.push_back(i);
    }
  }

  // Some basis with exactly `twisted` rows allowed a nonzero square?
  std::optional<bool> run(std::size_t twisted) {
    checks_ = 0;
    exhausted_ = false;
    rows_.clear();
    echelon_ = EchelonModP(t_.p, t_.n);
    const bool found = pick_square_zero(0, t_.n - twisted);
    if (found) return true;
    if (exhausted_) return std::nullopt;
    return false;
  }

 private:
  bool tick() {
    if (++checks_ > budget_) exhausted_ = true;
    return !exhausted_;
  }

  bool pick_square_zero(std::size_t start, std::size_t remaining) {
    if (remaining == 0) return pick_twisted();
    for (std::size_t s = start; s < square_zero_.size(); ++s) {
      if (!tick()) return false;
      const Residues& v = canon_[square_zero_[s]];
      if (!echelon_.push(v)) continue;
      rows_.push_back(v);
      if (pick_square_zero(s + 1, remaining - 1)) return true;
      rows_.pop_back();
      echelon_.pop();
      if (exhausted_) return false;
    }
    return false;
  }

  bool pick_twisted() {
    const std::size_t k = rows_.size();
    if (k == t_.n) return true;
    const std::size_t pairs = pair_count(t_.n);
    for (std::size_t idx = 0; idx < canon_.size(); ++idx) {
      if (!tick()) return false;
      const Residues& v = canon_[idx];
      if (k == 0) {
        if (!is_zero(squares_[idx])) continue;
      } else if (!is_zero(squares_[idx])) {
        std::vector<Residues> a(pairs, Residues(k));
        for (std::size_t i = 0; i < k; ++i) {
          const Residues prod = product(t_, rows_[i], v);
          for (std::size_t p = 0; p < pairs; ++p) a[p][i] = prod[p];
        }
        if (!solvable(std::move(a), squares_[idx], t_.p, t_.e)) continue;
      }
      if (!echelon_.push(v)) continue;
      rows_.push_back(v);
      if (pick_twisted()) return true;
      rows_.pop_back();
      echelon_.pop();
      if (exhausted_) return false;
    }
    return false;
  }

  const Tower& t_;
  const std::vector<Residues>& canon_;
  const std::vector<Residues>& squares_;
  std::vector<std::size_t> square_zero_;
  std::size_t budget_;
  std::size_t checks_ = 0;
  bool exhausted_ = false;
  EchelonModP echelon_;
  std::vector<Residues> rows_;
};

}  // namespace

std::optional<std::pair<long, int>> prime_power(long m) {
  if (m < 2) return std::nullopt;
  long p = 2;
  while (p * p <= m && m % p != 0) ++p;
  if (m % p != 0) p = m;
  int e = 0;
  long rest = m;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return std::make_pair(p, e);
}

long reduce_rational(const Rational& value, long m) {
  const Integer mm(m);
  Integer num = value.get_num() % mm;
  Integer den = value.get_den() % mm;
  if (gcd(den, mm) != 1) throw DomainError("entry " + to_string(value) + " does not reduce mod " + std::to_string(m));
  const long n = norm(num.get_si(), m);
  const long d = norm(den.get_si(), m);
  return (n * inverse(d, m)) % m;
}

Tower reduce(const BottMatrix& lambda, long m) {
  const auto pp = prime_power(m);
  if (!pp) throw DomainError("modulus " + std::to_string(m) + " is not a prime power");
  Tower t;
  t.m = m;
  t.p = pp->first;
  t.e = pp->second;
  t.n = lambda.size();
  t.c.assign(t.n * t.n, 0);
  for (std::size_t j = 0; j < t.n; ++j) {
    for (std::size_t i = 0; i < j; ++i) t.c[i * t.n + j] = reduce_rational(lambda(i, j), m);
  }
  return t;
}

Residues square(const Tower& t, const Residues& v) {
  Residues out(pair_count(t.n));
  for (std::size_t j = 0; j < t.n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      out[pair_index(i, j)] = norm(2 * v[i] * v[j] + v[j] * v[j] * t(i, j), t.m);
    }
  }
  return out;
}

Residues product(const Tower& t, const Residues& u, const Residues& v) {
  Residues out(pair_count(t.n));
  for (std::size_t j = 0; j < t.n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      out[pair_index(i, j)] = norm(u[i] * v[j] + u[j] * v[i] + u[j] * v[j] * t(i, j), t.m);
    }
  }
  return out;
}

int valuation(long x, long p, int e) {
  if (x == 0) return e;
  int v = 0;
  while (x % p == 0 && v < e) {
    x /= p;
    ++v;
  }
  return v;
}

bool solvable(std::vector<Residues> a, Residues b, long p, int e) {
  const long m = power(p, e);
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (auto& x : b) x = norm(x, m);
  for (auto& row : a) {
    for (auto& x : row) x = norm(x, m);
  }
  std::size_t r = 0;
  for (; r < std::min(rows, cols); ++r) {
    int best = e;
    std::size_t bi = r;
    std::size_t bj = r;
    for (std::size_t i = r; i < rows; ++i) {
      for (std::size_t j = r; j < cols; ++j) {
        const int v = valuation(a[i][j], p, e);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
        }
      }
    }
    if (best == e) break;
    std::swap(a[r], a[bi]);
    std::swap(b[r], b[bi]);
    for (auto& row : a) std::swap(row[r], row[bj]);
    const long scale = power(p, best);
    const long unit_inv = inverse((a[r][r] / scale) % m, m);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][r] == 0) continue;
      const long f = (a[i][r] / scale) % m * unit_inv % m;
      for (std::size_t j = r; j < cols; ++j) a[i][j] = norm(a[i][j] - f * a[r][j], m);
      b[i] = norm(b[i] - f * b[r], m);
    }
    for (std::size_t j = r + 1; j < cols; ++j) {
      if (a[r][j] == 0) continue;
      const long f = (a[r][j] / scale) % m * unit_inv % m;
      for (std::size_t i = r; i < rows; ++i) a[i][j] = norm(a[i][j] - f * a[i][r], m);
    }
  }
  for (std::size_t i = 0; i < rows; ++i) {
    const int need = i < r ? valuation(a[i][i], p, e) : e;
    if (valuation(b[i], p, e) < need) return false;
  }
  return true;
}

std::optional<bool> isomorphic(const Tower& a, const Tower& b, std::size_t budget) {
  if (a.n != b.n || a.m != b.m) throw DomainError("modular isomorphism: mismatched towers");
  const Space space = all_nonzero(a);
  IsoSearch search(a, b, space, budget);
  return search.run();
}

std::optional<std::size_t> complexity(const Tower& t, std::size_t limit, std::size_t budget) {
  limit = std::min(limit, t.n);
  if (limit == 0) return 0;
  // One representative per unit multiple: u v has square u^2 v^2 and the
  // same span, so nothing is lost.
  std::vector<long> units;
  for (long u = 1; u < t.m; ++u) {
    if (u % t.p != 0) units.push_back(u);
  }
  const Space space = all_nonzero(t);
  std::vector<Residues> canon;
  std::vector<Residues> canon_squares;
  for (std::size_t idx = 0; idx < space.vectors.size(); ++idx) {
    const Residues& v = space.vectors[idx];
    const std::size_t code = encode(v, t.m);
    bool least = true;
    for (long u : units) {
      Residues w(v.size());
      for (std::size_t i = 0; i < v.size(); ++i) w[i] = (u * v[i]) % t.m;
      if (encode(w, t.m) < code) {
        least = false;
        break;
      }
    }
    if (!least) continue;
    canon.push_back(v);
    canon_squares.push_back(space.squares[idx]);
  }
  ComplexitySearch search(t, canon, canon_squares, budget);
  for (std::size_t c = 0; c < limit; ++c) {
    const auto found = search.run(c);
    if (!found) return std::nullopt;
    if (*found) return c;
  }
  return limit;
}

}  // namespace bott::modular
