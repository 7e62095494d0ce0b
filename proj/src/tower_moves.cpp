#include "bott/tower_moves.hpp"

#include <algorithm>
#include <string>

namespace bott {

StagePermutation StagePermutation::identity(std::size_t n) {
  StagePermutation p;
  p.image.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.image[i] = i;
  return p;
}

StagePermutation StagePermutation::from_order(const std::vector<std::size_t>& order) {
  StagePermutation p;
  p.image.assign(order.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) p.image[order[pos]] = pos;
  return p;
}

StagePermutation StagePermutation::inverse() const {
  StagePermutation p;
  p.image.assign(image.size(), 0);
  for (std::size_t i = 0; i < image.size(); ++i) p.image[image[i]] = i;
  return p;
}

StagePermutation operator*(const StagePermutation& a, const StagePermutation& b) {
  if (a.size() != b.size()) throw DomainError("composing permutations of different size");
  StagePermutation p;
  p.image.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) p.image[i] = a.image[b.image[i]];
  return p;
}

InadmissiblePermutation::InadmissiblePermutation(std::size_t r, std::size_t c)
    : std::invalid_argument("permutation is not admissible: entry (" + std::to_string(r + 1) + "," +
                            std::to_string(c + 1) + ") would move on or below the diagonal"),
      row(r),
      col(c) {}

namespace {

void check_permutation(const StagePermutation& sigma, std::size_t n) {
  if (sigma.size() != n) throw DomainError("permutation size differs from tower height");
  std::vector<bool> seen(n, false);
  for (std::size_t v : sigma.image) {
    if (v >= n || seen[v]) throw DomainError("stage relabelling is not a bijection");
    seen[v] = true;
  }
}

}  // namespace

BottMatrix conjugate(const BottMatrix& lambda, const StagePermutation& sigma) {
  const std::size_t n = lambda.size();
  check_permutation(sigma, n);
  BottMatrix out(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (sgn(lambda(i, j)) == 0) continue;
      if (sigma(i) >= sigma(j)) throw InadmissiblePermutation(i, j);
      out.set(sigma(i), sigma(j), lambda(i, j));
    }
  }
  return out;
}

bool is_admissible(const BottMatrix& lambda, const StagePermutation& sigma) {
  check_permutation(sigma, lambda.size());
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (sgn(lambda(i, j)) != 0 && sigma(i) >= sigma(j)) return false;
    }
  }
  return true;
}

namespace {

void extend_orders(const BottMatrix& lambda, std::vector<std::size_t>& order, std::vector<bool>& placed,
                   std::vector<StagePermutation>& out) {
  const std::size_t n = lambda.size();
  if (order.size() == n) {
    out.push_back(StagePermutation::from_order(order));
    return;
  }
  for (std::size_t s = 0; s < n; ++s) {
    if (placed[s]) continue;
    bool ready = true;
    for (std::size_t i = 0; i < s && ready; ++i) {
      if (sgn(lambda(i, s)) != 0 && !placed[i]) ready = false;
    }
    if (!ready) continue;
    placed[s] = true;
    order.push_back(s);
    extend_orders(lambda, order, placed, out);
    order.pop_back();
    placed[s] = false;
  }
}

}  // namespace

std::vector<StagePermutation> admissible_permutations(const BottMatrix& lambda, std::size_t max_n) {
  if (lambda.size() > max_n) {
    throw DomainError("admissible permutation enumeration bound exceeded (n = " + std::to_string(lambda.size()) +
                      ", bound " + std::to_string(max_n) + ")");
  }
  std::vector<StagePermutation> out;
  std::vector<std::size_t> order;
  std::vector<bool> placed(lambda.size(), false);
  extend_orders(lambda, order, placed, out);
  return out;
}

StagePermutation trivial_first_permutation(const BottMatrix& lambda) {
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (lambda.column_is_zero(j)) order.push_back(j);
  }
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (!lambda.column_is_zero(j)) order.push_back(j);
  }
  return StagePermutation::from_order(order);
}

bool stage_bundle_trivial(const BottMatrix& lambda, std::size_t m, CoeffRing ring) {
  if (m >= lambda.size()) throw DomainError("stage index out of range");
  const std::vector<Rational> f = lambda.column(m);
  if (!std::all_of(f.begin(), f.end(), [ring](const Rational& c) { return is_even(c, ring); })) return false;
  if (m == 0) return true;
  const auto base = CohomologyRing::create(lambda.prefix(m), ring);
  const RingElement fm = base->line(LineClass(f));
  return (fm * fm).is_zero();
}

LineClass trivializing_shift(const BottMatrix& lambda, std::size_t m, CoeffRing ring) {
  std::vector<Rational> f = lambda.column(m);
  for (auto& c : f) {
    if (!is_even(c, ring)) throw DomainError("stage twist is not divisible by 2");
    c = -c / 2;
  }
  return LineClass(std::move(f));
}

std::optional<BottMatrix> trivialize_stage(const BottMatrix& lambda, std::size_t m, CoeffRing ring) {
  if (m >= lambda.size()) throw DomainError("stage index out of range");
  if (lambda.column_is_zero(m) || !stage_bundle_trivial(lambda, m, ring)) return std::nullopt;
  const LineClass w = trivializing_shift(lambda, m, ring);
  BottMatrix out = lambda;
  for (std::size_t i = 0; i < m; ++i) out.set(i, m, 0);
  // x_m = x'_m - w, so c_mj x_m contributes -c_mj w_i to x_i.
  for (std::size_t j = m + 1; j < lambda.size(); ++j) {
    const Rational& cmj = lambda(m, j);
    if (sgn(cmj) == 0) continue;
    for (std::size_t i = 0; i < m; ++i) out.set(i, j, lambda(i, j) - cmj * w.coeffs[i]);
  }
  return out;
}

std::optional<LineClass> retwist(const LineClass& alpha, const LineClass& w, CoeffRing ring) {
  if (alpha.size() != w.size()) throw DomainError("retwist: class lengths differ");
  if (alpha.size() == 0) throw DomainError("retwist needs a base of positive height");
  const auto base = CohomologyRing::trivial(alpha.size(), ring);
  const LineClass beta = alpha - Rational(2) * w;
  if (!(base->line(w) * base->line(beta + w)).is_zero()) return std::nullopt;
  return beta;
}

BottMatrix normalize_last_twist(const BottMatrix& lambda) {
  const std::size_t n = lambda.size();
  std::optional<std::size_t> twisted;
  for (std::size_t j = 0; j < n; ++j) {
    if (lambda.column_is_zero(j)) continue;
    if (twisted) throw DomainError("normalize_last_twist: more than one nonzero column");
    twisted = j;
  }
  if (!twisted || *twisted == n - 1) return lambda;
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < n; ++s) {
    if (s != *twisted) order.push_back(s);
  }
  order.push_back(*twisted);
  return conjugate(lambda, StagePermutation::from_order(order));
}

}  // namespace bott
