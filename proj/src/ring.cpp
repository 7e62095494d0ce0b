#include "bott/ring.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace bott {

std::vector<std::size_t> indices_of(Monomial m) {
  std::vector<std::size_t> out;
  while (m != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

int degree_of(Monomial m) { return std::popcount(m); }

// ---------------------------------------------------------------------------
// LineClass

LineClass LineClass::from_ints(const std::vector<long>& values) {
  std::vector<Rational> c;
  c.reserve(values.size());
  for (long v : values) c.emplace_back(v);
  return LineClass(std::move(c));
}

bool LineClass::is_zero() const { return support_size() == 0; }

std::size_t LineClass::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs.begin(), coeffs.end(), [](const Rational& v) { return sgn(v) != 0; }));
}

LineClass operator+(const LineClass& a, const LineClass& b) {
  if (a.size() != b.size()) throw DomainError("line classes of different length");
  LineClass r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

LineClass operator-(const LineClass& a) {
  LineClass r = a;
  for (auto& v : r.coeffs) v = -v;
  return r;
}

LineClass operator-(const LineClass& a, const LineClass& b) { return a + (-b); }

LineClass operator*(const Rational& s, const LineClass& a) {
  LineClass r = a;
  for (auto& v : r.coeffs) v *= s;
  return r;
}

// ---------------------------------------------------------------------------
// CohomologyRing

std::shared_ptr<const CohomologyRing> CohomologyRing::create(BottMatrix lambda, CoeffRing ring) {
  if (lambda.size() == 0) throw DomainError("cohomology ring needs a tower of positive height");
  if (!lambda.entries_in(ring)) {
    throw DomainError("associated matrix has entries outside ring " + std::string(to_string(ring)));
  }
  return std::shared_ptr<const CohomologyRing>(new CohomologyRing(std::move(lambda), ring));
}

std::shared_ptr<const CohomologyRing> CohomologyRing::trivial(std::size_t n, CoeffRing ring) {
  return create(BottMatrix(n), ring);
}

RingElement CohomologyRing::zero() const { return RingElement(shared_from_this(), {}); }

RingElement CohomologyRing::one() const { return scalar(1); }

RingElement CohomologyRing::scalar(const Rational& value) const {
  return RingElement(shared_from_this(), {{Monomial{0}, require_in_ring(value, ring_)}});
}

RingElement CohomologyRing::generator(std::size_t i) const {
  if (i >= height()) throw DomainError("generator index out of range");
  return RingElement(shared_from_this(), {{Monomial{1} << i, Rational(1)}});
}

RingElement CohomologyRing::line(const LineClass& alpha) const {
  if (alpha.size() != height()) throw DomainError("line class length differs from tower height");
  RingElement::Terms terms;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    terms[Monomial{1} << i] = require_in_ring(alpha.coeffs[i], ring_);
  }
  return RingElement(shared_from_this(), std::move(terms));
}

RingElement CohomologyRing::monomial(Monomial m, const Rational& coeff) const {
  if (height() < 64 && (m >> height()) != 0) throw DomainError("monomial uses an index beyond the tower height");
  return RingElement(shared_from_this(), {{m, require_in_ring(coeff, ring_)}});
}

void CohomologyRing::accumulate_times_generator(std::map<Monomial, Rational>& out, Monomial m,
                                                const Rational& coeff, std::size_t i) const {
  const Monomial bit = Monomial{1} << i;
  if ((m & bit) == 0) {
    out[m | bit] += coeff;
    return;
  }
  // m * x_i = m * f_i since x_i already divides m.
  for (std::size_t k = 0; k < i; ++k) {
    const Rational& c = lambda_(k, i);
    if (sgn(c) != 0) accumulate_times_generator(out, m, coeff * c, k);
  }
}

RingElement CohomologyRing::reduce_monomial(std::span<const std::size_t> indices) const {
  using Multiset = std::vector<std::size_t>;
  std::map<Multiset, Rational> pending;
  {
    Multiset start(indices.begin(), indices.end());
    for (std::size_t i : start) {
      if (i >= height()) throw DomainError("monomial index " + std::to_string(i + 1) + " out of range");
    }
    std::sort(start.begin(), start.end());
    pending[start] = 1;
  }
  RingElement::Terms result;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Multiset& ms = node.key();
    const Rational& coeff = node.mapped();
    if (sgn(coeff) == 0) continue;
    // Highest index occurring at least twice.
    std::size_t repeated = height();
    for (std::size_t p = ms.size(); p-- > 1;) {
      if (ms[p] == ms[p - 1]) {
        repeated = ms[p];
        break;
      }
    }
    if (repeated == height()) {
      Monomial m = 0;
      for (std::size_t i : ms) m |= Monomial{1} << i;
      result[m] += coeff;
      continue;
    }
    Multiset reduced = ms;
    reduced.erase(std::find(reduced.begin(), reduced.end(), repeated));
    for (std::size_t k = 0; k < repeated; ++k) {
      const Rational& c = lambda_(k, repeated);
      if (sgn(c) == 0) continue;
      Multiset next = reduced;
      next.insert(std::upper_bound(next.begin(), next.end(), k), k);
      pending[std::move(next)] += coeff * c;
    }
  }
  return RingElement(shared_from_this(), std::move(result));
}

bool CohomologyRing::top_class_nonzero() const {
  std::vector<std::size_t> all(height());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return !reduce_monomial(all).is_zero();
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(std::shared_ptr<const CohomologyRing> ring, Terms terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
}

void RingElement::check_same_ring(const RingElement& other) const {
  if (ring_ != other.ring_ && !ring_->same_as(*other.ring_)) {
    throw DomainError("ring elements live in different cohomology rings");
  }
}

Rational RingElement::coefficient(Monomial m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

RingElement RingElement::homogeneous_part(int p) const {
  Terms out;
  for (const auto& [m, c] : terms_) {
    if (degree_of(m) == p) out.emplace(m, c);
  }
  return RingElement(ring_, std::move(out));
}

int RingElement::top_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
  return d;
}

RingElement RingElement::times_generator(std::size_t i) const {
  if (i >= ring_->height()) throw DomainError("generator index out of range");
  Terms out;
  for (const auto& [m, c] : terms_) ring_->accumulate_times_generator(out, m, c, i);
  return RingElement(ring_, std::move(out));
}

RingElement operator+(const RingElement& a, const RingElement& b) {
  a.check_same_ring(b);
  RingElement::Terms out = a.terms_;
  for (const auto& [m, c] : b.terms_) out[m] += c;
  return RingElement(a.ring_, std::move(out));
}

RingElement operator-(const RingElement& a) {
  RingElement::Terms out = a.terms_;
  for (auto& [m, c] : out) c = -c;
  return RingElement(a.ring_, std::move(out));
}

RingElement operator-(const RingElement& a, const RingElement& b) { return a + (-b); }

RingElement operator*(const Rational& s, const RingElement& a) {
  require_in_ring(s, a.ring_->coeff_ring());
  RingElement::Terms out = a.terms_;
  for (auto& [m, c] : out) c *= s;
  return RingElement(a.ring_, std::move(out));
}

RingElement mul(const RingElement& a, const RingElement& b) {
  a.check_same_ring(b);
  RingElement::Terms out;
  for (const auto& [mb, cb] : b.terms_) {
    RingElement::Terms partial;
    for (const auto& [ma, ca] : a.terms_) partial.emplace(ma, ca * cb);
    for (std::size_t i : indices_of(mb)) {
      RingElement::Terms next;
      for (const auto& [m, c] : partial) a.ring_->accumulate_times_generator(next, m, c, i);
      partial = std::move(next);
    }
    for (const auto& [m, c] : partial) out[m] += c;
  }
  return RingElement(a.ring_, std::move(out));
}

bool operator==(const RingElement& a, const RingElement& b) {
  a.check_same_ring(b);
  return a.terms_ == b.terms_;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  // Degree-major order reads better than raw bit order.
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& l, const auto& r) { return degree_of(l.first) < degree_of(r.first); });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    if (!first) out << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) out << '-';
    first = false;
    const Rational mag = abs(c);
    if (m == 0 || mag != 1) out << mag.get_str();
    for (std::size_t i : indices_of(m)) out << 'x' << (i + 1);
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Characteristic classes

RingElement total_chern_sum(const CohomologyRing& ring, const LineClass& alpha, const LineClass& beta) {
  const RingElement a = ring.one() + ring.line(alpha);
  const RingElement b = ring.one() + ring.line(beta);
  return a * b;
}

bool line_sum_trivial(const CohomologyRing& ring, const LineClass& alpha, const LineClass& beta) {
  return total_chern_sum(ring, alpha, beta) == ring.one();
}

RingElement pontrjagin_one_twist(const CohomologyRing& base, const LineClass& alpha) {
  if (!base.matrix().is_zero()) {
    throw DomainError("one-twist Pontrjagin class needs the trivial base (CP^1)^{n-1}");
  }
  const RingElement a = base.line(alpha);
  return base.one() + a * a;
}

std::size_t pair_index(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

std::vector<Rational> square_coefficients(const BottMatrix& lambda, const LineClass& alpha) {
  const std::size_t n = lambda.size();
  if (alpha.size() != n) throw DomainError("line class length differs from tower height");
  std::vector<Rational> out(pair_count(n));
  for (std::size_t j = 1; j < n; ++j) {
    const Rational& aj = alpha.coeffs[j];
    if (sgn(aj) == 0) continue;
    for (std::size_t i = 0; i < j; ++i) {
      out[pair_index(i, j)] = 2 * alpha.coeffs[i] * aj + aj * aj * lambda(i, j);
    }
  }
  return out;
}

std::vector<Rational> product_coefficients(const BottMatrix& lambda, const LineClass& u, const LineClass& v) {
  const std::size_t n = lambda.size();
  if (u.size() != n || v.size() != n) throw DomainError("line class length differs from tower height");
  std::vector<Rational> out(pair_count(n));
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      out[pair_index(i, j)] = u.coeffs[i] * v.coeffs[j] + u.coeffs[j] * v.coeffs[i] +
                              u.coeffs[j] * v.coeffs[j] * lambda(i, j);
    }
  }
  return out;
}

bool square_zero_condition(const BottMatrix& lambda, const LineClass& alpha) {
  const std::size_t n = lambda.size();
  if (alpha.size() != n) throw DomainError("line class length differs from tower height");
  for (std::size_t j = 1; j < n; ++j) {
    const Rational& aj = alpha.coeffs[j];
    for (std::size_t i = 0; i < j; ++i) {
      if (aj * aj * lambda(i, j) != -2 * aj * alpha.coeffs[i]) return false;
    }
  }
  return true;
}

}  // namespace bott
