#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/kernels.hpp"
#include "bott/linalg.hpp"
#include "bott/tower_moves.hpp"

namespace bott {

/// Characteristic matrix of a quasitoric manifold over the n-cube, stored
/// as the normalized -A with unit diagonal. Rows are indexed by pairs of
/// opposite facets.
class CharMatrix {
 public:
  CharMatrix() = default;
  /// Flips every row whose diagonal entry is -1; throws DomainError for a
  /// non-square input or a diagonal entry other than +-1.
  static CharMatrix from_rows(const IntegerMatrix& rows);
  static CharMatrix from_int_rows(const std::vector<std::vector<long>>& rows);

  std::size_t size() const { return m_.size(); }
  const Integer& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  const IntegerMatrix& rows() const { return m_; }
  friend bool operator==(const CharMatrix&, const CharMatrix&) = default;

 private:
  IntegerMatrix m_;
};

/// Principal minors indexed by subset bit mask (mask 0 has minor 1).
/// Requires n <= 20.
std::vector<Integer> principal_minors(const IntegerMatrix& m, Execution exec = Execution::Parallel);

/// Every principal minor is +1 or -1.
bool validate_characteristic(const CharMatrix& m, Execution exec = Execution::Parallel);

struct BottRecognition {
  bool is_bott = false;
  /// Stage relabelling making the matrix upper triangular.
  std::optional<StagePermutation> sigma;
  /// A directed cycle of nonzero off-diagonal entries when not Bott.
  std::vector<std::size_t> cycle;
};

/// Topological sort of the digraph i -> j for M[i][j] != 0 (i != j).
/// Requires a valid characteristic matrix. On acceptance the structural
/// facts M[i][j] M[j][i] = 0 and "every principal minor is +1" are
/// asserted and a violation throws std::logic_error.
BottRecognition is_bott(const CharMatrix& m);

/// Lambda = sigma M sigma^{-1} - I. The characteristic matrix of the
/// resulting tower is -Lambda - I, whose normalization is M again.
BottMatrix to_bott_matrix(const CharMatrix& m, const StagePermutation& sigma);

/// M = Lambda + I. Requires integral entries.
CharMatrix from_bott_matrix(const BottMatrix& lambda);

/// The presentation of Lambda satisfies both BQ-algebra axioms: the
/// relations x_k^2 = f_k x_k hold in the ring, and the product of all
/// generators is nonzero.
bool bq_structure_check(const BottMatrix& lambda);

/// Unit diagonal with h_i at (i, i+1 mod k).
IntegerMatrix cyclic_matrix(const std::vector<Integer>& h);

/// Determinant of cyclic_matrix(h): 1 - (-1)^k h_1 ... h_k.
Integer cyclic_minor(const std::vector<Integer>& h);

}  // namespace bott
