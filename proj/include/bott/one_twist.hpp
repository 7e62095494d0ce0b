#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/kernels.hpp"
#include "bott/scalar.hpp"

namespace bott {

/// M(alpha) = P(C + gamma^alpha) over (CP^1)^{n-1}; alpha has n-1 entries.
struct OneTwistClass {
  std::vector<Integer> alpha;

  static OneTwistClass from_ints(const std::vector<long>& values);
  std::size_t n() const { return alpha.size() + 1; }
  /// Bott matrix with only the last column nonzero, equal to alpha.
  BottMatrix to_bott_matrix() const;
  std::string to_string() const;
  friend bool operator==(const OneTwistClass&, const OneTwistClass&) = default;
  friend auto operator<=>(const OneTwistClass& a, const OneTwistClass& b) {
    return a.alpha <=> b.alpha;
  }
};

/// sigma maps positions of beta to positions of alpha: a_{sigma(i)} pairs
/// with b_i.
struct EquivalenceWitness {
  std::vector<std::size_t> sigma;
  std::vector<bool> parity_checks;   // a_{sigma(i)} = b_i mod 2
  std::vector<bool> product_checks;  // |a_{sigma(i)} a_{sigma(j)}| = |b_i b_j|, pair_index order
  bool valid() const;
};

/// Recomputes every check of a witness from scratch.
EquivalenceWitness check_witness(const OneTwistClass& alpha, const OneTwistClass& beta,
                                 const std::vector<std::size_t>& sigma);

/// Some permutation matches parities and absolute pairwise products.
/// Positions are assigned in order of ascending parity-class size and
/// product constraints are checked as soon as both ends are placed.
std::optional<EquivalenceWitness> diffeo_equivalent(const OneTwistClass& alpha, const OneTwistClass& beta);

/// At most one nonzero coordinate.
bool rational_trivial(const OneTwistClass& alpha);

/// At most one nonzero coordinate, and it is even.
bool integral_trivial(const OneTwistClass& alpha);

/// Sorted multiset {|2 a_i a_j| : i < j}: the absolute coefficients of
/// alpha^2 in the basis x_i x_j.
std::vector<Integer> pontrjagin_invariant(const OneTwistClass& alpha);

/// With at least three nonzero coordinates, |a_i| is determined by the
/// pairwise products: |a_i|^2 = |a_i a_j| |a_i a_k| / |a_j a_k|. Returns
/// the reconstruction (zeros stay zero), or nullopt with fewer than three
/// nonzero coordinates.
std::optional<std::vector<Integer>> magnitudes_from_products(const OneTwistClass& alpha);

struct EquivalenceClassReport {
  OneTwistClass representative;
  std::vector<OneTwistClass> members;
  std::vector<Integer> pontrjagin;
};

using OneTwistRelation = std::function<bool(const OneTwistClass&, const OneTwistClass&)>;

/// Union-find over a pairwise relation evaluated for every pair and merged
/// in a fixed order. Classes are listed by representative; members keep
/// corpus order.
std::vector<EquivalenceClassReport> partition_by(const std::vector<OneTwistClass>& corpus,
                                                 const OneTwistRelation& equivalent,
                                                 Execution exec = Execution::Parallel);

/// partition_by with diffeo_equivalent.
std::vector<EquivalenceClassReport> classify(const std::vector<OneTwistClass>& corpus,
                                             Execution exec = Execution::Parallel);

/// Every alpha in [-bound, bound]^{n-1}, lexicographic.
std::vector<OneTwistClass> one_twist_corpus(std::size_t n, long bound);

/// Order used to pick representatives: sorted absolute values, then the
/// parity pattern, then the number of negative entries, then the vector.
bool representative_less(const OneTwistClass& a, const OneTwistClass& b);

}  // namespace bott
