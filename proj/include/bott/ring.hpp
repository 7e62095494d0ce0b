#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/scalar.hpp"

namespace bott {

/// Squarefree monomial as a bit set over generators x_0 .. x_{n-1}.
using Monomial = std::uint64_t;

inline Monomial monomial_of(std::initializer_list<std::size_t> indices) {
  Monomial m = 0;
  for (std::size_t i : indices) m |= Monomial{1} << i;
  return m;
}

std::vector<std::size_t> indices_of(Monomial m);
int degree_of(Monomial m);

/// Degree-2 class alpha = sum_i a_i x_i.
struct LineClass {
  std::vector<Rational> coeffs;

  LineClass() = default;
  explicit LineClass(std::vector<Rational> c) : coeffs(std::move(c)) {}
  static LineClass from_ints(const std::vector<long>& values);
  static LineClass zero(std::size_t n) { return LineClass(std::vector<Rational>(n)); }

  std::size_t size() const { return coeffs.size(); }
  bool is_zero() const;
  std::size_t support_size() const;

  friend bool operator==(const LineClass&, const LineClass&) = default;
  friend LineClass operator+(const LineClass& a, const LineClass& b);
  friend LineClass operator-(const LineClass& a, const LineClass& b);
  friend LineClass operator-(const LineClass& a);
  friend LineClass operator*(const Rational& s, const LineClass& a);
};

class RingElement;

/// H^*(B_n; R) = R[x_1..x_n] / (x_j (x_j - f_j)) for a Bott matrix and a
/// coefficient ring. Immutable; shared by the elements that live in it.
class CohomologyRing : public std::enable_shared_from_this<CohomologyRing> {
 public:
  static std::shared_ptr<const CohomologyRing> create(BottMatrix lambda, CoeffRing ring = CoeffRing::IntegerZ);

  /// The ring of (CP^1)^n.
  static std::shared_ptr<const CohomologyRing> trivial(std::size_t n, CoeffRing ring = CoeffRing::IntegerZ);

  const BottMatrix& matrix() const { return lambda_; }
  CoeffRing coeff_ring() const { return ring_; }
  std::size_t height() const { return lambda_.size(); }

  RingElement zero() const;
  RingElement one() const;
  RingElement scalar(const Rational& value) const;
  RingElement generator(std::size_t i) const;
  RingElement line(const LineClass& alpha) const;
  RingElement monomial(Monomial m, const Rational& coeff = 1) const;

  /// Normal form of a product of generators given as an index multiset.
  /// Rewrites the square of the highest repeated index j as f_j x_j until
  /// the multiset is squarefree; f_j only involves lower indices, so the
  /// rewriting terminates.
  RingElement reduce_monomial(std::span<const std::size_t> indices) const;

  /// x_0 x_1 ... x_{n-1} != 0.
  bool top_class_nonzero() const;

  bool same_as(const CohomologyRing& other) const {
    return ring_ == other.ring_ && lambda_ == other.lambda_;
  }

 private:
  CohomologyRing(BottMatrix lambda, CoeffRing ring) : lambda_(std::move(lambda)), ring_(ring) {}

  friend class RingElement;
  friend RingElement mul(const RingElement& a, const RingElement& b);
  /// Adds coeff * (m * x_i) to out. Uses x_i^2 = f_i x_i when i divides m.
  void accumulate_times_generator(std::map<Monomial, Rational>& out, Monomial m, const Rational& coeff,
                                  std::size_t i) const;

  BottMatrix lambda_;
  CoeffRing ring_;
};

/// Exact element in the squarefree-monomial basis; zero coefficients are
/// never stored, so structural equality is ring equality.
class RingElement {
 public:
  using Terms = std::map<Monomial, Rational>;

  const Terms& terms() const { return terms_; }
  const CohomologyRing& ring() const { return *ring_; }
  std::shared_ptr<const CohomologyRing> ring_ptr() const { return ring_; }

  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Monomial m) const;

  /// Degree-2p component (p = number of generators per monomial).
  RingElement homogeneous_part(int p) const;

  /// Largest monomial degree present, or -1 for zero.
  int top_degree() const;

  RingElement times_generator(std::size_t i) const;

  friend RingElement operator+(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a, const RingElement& b);
  friend RingElement operator-(const RingElement& a);
  friend RingElement operator*(const Rational& s, const RingElement& a);
  friend RingElement operator*(const RingElement& a, const RingElement& b) { return mul(a, b); }
  friend RingElement mul(const RingElement& a, const RingElement& b);

  friend bool operator==(const RingElement& a, const RingElement& b);

  std::string to_string() const;

 private:
  friend class CohomologyRing;
  RingElement(std::shared_ptr<const CohomologyRing> ring, Terms terms);
  void check_same_ring(const RingElement& other) const;

  std::shared_ptr<const CohomologyRing> ring_;
  Terms terms_;
};

/// (1 + alpha)(1 + beta), the total Chern class of gamma^alpha + gamma^beta.
RingElement total_chern_sum(const CohomologyRing& ring, const LineClass& alpha, const LineClass& beta);

/// gamma^alpha + gamma^beta is trivial iff its total Chern class is 1.
bool line_sum_trivial(const CohomologyRing& ring, const LineClass& alpha, const LineClass& beta);

/// 1 + alpha^2 in H^*((CP^1)^{n-1}). Rejects a nontrivial ambient tower.
RingElement pontrjagin_one_twist(const CohomologyRing& base, const LineClass& alpha);

// Closed forms in degree 4. H^4 has basis {x_i x_j : i < j}; pair_index
// orders it by (j, i) lexicographically.

std::size_t pair_index(std::size_t i, std::size_t j);
std::size_t pair_count(std::size_t n);

/// Coefficients of alpha^2: 2 a_i a_j + a_j^2 c_ij on x_i x_j.
std::vector<Rational> square_coefficients(const BottMatrix& lambda, const LineClass& alpha);

/// Coefficients of u * v: u_i v_j + u_j v_i + u_j v_j c_ij on x_i x_j.
std::vector<Rational> product_coefficients(const BottMatrix& lambda, const LineClass& u, const LineClass& v);

/// a_j^2 c_ij = -2 a_j a_i for all i < j, i.e. alpha^2 = 0 read coefficientwise.
bool square_zero_condition(const BottMatrix& lambda, const LineClass& alpha);

}  // namespace bott
