#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/kernels.hpp"
#include "bott/linalg.hpp"
#include "bott/ring.hpp"
#include "bott/tower_moves.hpp"

namespace bott {

/// Row k holds the coefficients of the new generator y_k in the old
/// generators: y_k = sum_j rows[k][j] x_j.
struct GeneratorChange {
  RationalMatrix rows;

  static GeneratorChange identity(std::size_t n);
  std::size_t size() const { return rows.size(); }
  LineClass row(std::size_t k) const { return LineClass(rows[k]); }
  Rational determinant() const;
  bool unimodular(CoeffRing ring) const;
  friend bool operator==(const GeneratorChange&, const GeneratorChange&) = default;
};

/// Coefficient values tried by the bounded searches, in trial order
/// 0, 1, -1, 2, -2, ... then the non-integral ones (p/3 over Z_(2),
/// p/2 over Q).
std::vector<Rational> coefficient_values(CoeffRing ring, long bound);

/// Checks through the ring engine that the rows satisfy the relations of
/// `target` inside H^*(source): y_k^2 = (sum_{i<k} target(i,k) y_i) y_k,
/// and that the change has unit determinant.
bool verify_generator_change(const BottMatrix& source, const BottMatrix& target, const GeneratorChange& change,
                             CoeffRing ring);

/// For every row whose target column is zero (y_k^2 = 0), the coefficient
/// constraint 2 b_kj b_ki = -b_kj^2 c_ij holds for all i < j.
bool square_zero_rows_satisfy_constraints(const BottMatrix& source, const BottMatrix& target,
                                          const GeneratorChange& change);

/// If every entry of the rows x cols block is even and
/// |rows| + |cols| > n, the determinant is even (the block forces every
/// term of the Laplace expansion along those rows through an even entry).
bool even_block_forces_even_determinant(const RationalMatrix& b, const std::vector<std::size_t>& rows,
                                        const std::vector<std::size_t>& cols);

struct OracleOptions {
  CoeffRing ring = CoeffRing::IntegerZ;
  long coeff_bound = 2;
  /// Prime powers used for modular obstructions. Empty selects the
  /// default list for the ring: {2, 4, 3, 8} over Z, {2, 4, 8} over
  /// Z_(2), none over Q.
  std::vector<long> moduli;
  bool use_default_moduli = true;
  /// Node budget for each independent top-level branch of a search.
  std::size_t node_budget = 2'000'000;
  Execution execution = Execution::Parallel;
};

std::vector<long> effective_moduli(const OracleOptions& options);

enum class Verdict { Isomorphic, NotIsomorphic, Unknown };
std::string to_string(Verdict v);

struct IsomorphismResult {
  Verdict verdict = Verdict::Unknown;
  /// Rows are images of the target generators in H^*(source).
  std::optional<GeneratorChange> witness;
  /// Modulus whose reduction has no isomorphism, for NotIsomorphic.
  std::optional<long> obstruction_modulus;
  bool budget_exhausted = false;
};

/// Bounded search for a graded isomorphism H^*(lambda2) -> H^*(lambda1):
/// generators y_k in H^2(lambda1) with |coefficients| <= bound satisfying
/// y_k^2 = (sum_{i<k} lambda2(i,k) y_i) y_k and unit determinant.
/// NotIsomorphic only comes from an exhaustive search modulo a prime power
/// that finds nothing; a bounded miss alone gives Unknown.
IsomorphismResult ring_isomorphic(const BottMatrix& lambda1, const BottMatrix& lambda2,
                                  const OracleOptions& options = {});

/// Exhaustive modular search: does some change of generators over Z/m
/// carry the relations of lambda2 into H^*(lambda1; Z/m)? nullopt when the
/// node budget ran out. m must be a prime power and the entries must
/// reduce mod m.
std::optional<bool> isomorphic_mod(const BottMatrix& lambda1, const BottMatrix& lambda2, long m,
                                   std::size_t node_budget = 2'000'000);

struct ComplexityReport {
  /// Least nonzero-column count among presentations found within bounds.
  std::size_t value = 0;
  BottMatrix presentation;
  GeneratorChange witness;
  /// Proven lower bound from modular reductions (0 when none applies).
  std::size_t lower_bound = 0;
  std::optional<long> lower_bound_modulus;
  /// lower_bound == value: the complexity is determined exactly.
  bool certified = false;
  bool budget_exhausted = false;
};

/// Cohomological complexity within coefficient bounds: the least number of
/// generators y_k with y_k^2 != 0 over all unimodular changes whose rows
/// satisfy y_k^2 = g_k y_k with g_k in the span of earlier rows.
ComplexityReport complexity_oracle(const BottMatrix& lambda, const OracleOptions& options = {});

/// Least number of non-square-zero generators over Z/m, searched for
/// counts below `limit`. Returns limit when no smaller count exists,
/// nullopt when the budget ran out.
std::optional<std::size_t> complexity_mod(const BottMatrix& lambda, long m, std::size_t limit,
                                          std::size_t node_budget = 2'000'000);

/// Highest m (descending) whose nonzero column f_m is even with f_m^2 = 0
/// over the prefix ring, i.e. a stage that can be made trivial.
std::optional<std::size_t> find_reducible_stage(const BottMatrix& lambda, CoeffRing ring = CoeffRing::IntegerZ);

struct Move {
  enum class Kind { Conjugate, TrivializeStage, Retwist, NormalizeTrivialFirst };
  Kind kind = Kind::Conjugate;
  StagePermutation sigma;  // Conjugate, NormalizeTrivialFirst
  std::size_t stage = 0;   // TrivializeStage
  LineClass shift;         // Retwist: the class w
  BottMatrix before;
  BottMatrix after;
};
std::string to_string(Move::Kind kind);

struct TwistOptions {
  CoeffRing ring = CoeffRing::IntegerZ;
  bool certified = false;
  std::size_t certified_max_n = 5;
  /// Conjugacy classes explored before the search gives up.
  std::size_t state_budget = 20000;
  OracleOptions oracle;
};

struct TwistReport {
  std::size_t twist = 0;
  std::vector<Move> witness_moves;
  BottMatrix minimal_form;
  /// True when the move closure was exhausted or reached twist 0.
  bool search_complete = false;
  /// True when the oracle found no presentation with fewer twisted stages
  /// within its bounds (or twist is already 0).
  bool certified_minimal = false;
  /// True when modular lower bounds prove the twist is minimal outright.
  bool proven_minimal = false;
  std::optional<ComplexityReport> oracle;
  bool oracle_disagrees = false;
};

/// Closed search over conjugation, stage trivialization and one-twist
/// retwisting, minimizing the number of nonzero columns. In certified mode
/// the complexity oracle runs as well and disagreement is reported.
TwistReport twist_number(const BottMatrix& lambda, const TwistOptions& options = {});

/// Canonical representative of the conjugacy class: the least conjugate.
BottMatrix conjugacy_representative(const BottMatrix& lambda);

}  // namespace bott
