#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/ring.hpp"

namespace bott {

/// Relabelling of stages: stage i of the source tower becomes stage
/// image[i] of the target. Conjugation by the permutation matrix moves
/// entry (i, j) to (image[i], image[j]).
///
/// Swapping two adjacent stages that do not depend on each other gives a
/// diffeomorphic tower. Any admissible relabelling is a composition of such
/// swaps, since linear extensions of a partial order are connected by
/// adjacent transpositions.
struct StagePermutation {
  std::vector<std::size_t> image;

  static StagePermutation identity(std::size_t n);
  /// Build from a stage order: order[p] is the source stage placed at p.
  static StagePermutation from_order(const std::vector<std::size_t>& order);

  std::size_t size() const { return image.size(); }
  std::size_t operator()(std::size_t i) const { return image[i]; }
  StagePermutation inverse() const;
  /// (a * b)(i) = a(b(i)).
  friend StagePermutation operator*(const StagePermutation& a, const StagePermutation& b);
  friend bool operator==(const StagePermutation&, const StagePermutation&) = default;
};

class InadmissiblePermutation : public std::invalid_argument {
 public:
  InadmissiblePermutation(std::size_t row, std::size_t col);
  std::size_t row;
  std::size_t col;
};

/// Throws InadmissiblePermutation naming the first source entry (row, col)
/// that would land on or below the diagonal.
BottMatrix conjugate(const BottMatrix& lambda, const StagePermutation& sigma);

bool is_admissible(const BottMatrix& lambda, const StagePermutation& sigma);

/// All admissible permutations, i.e. linear extensions of the dependency
/// digraph (edge i -> j when entry (i, j) != 0), in lexicographic order of
/// the stage sequence. Throws DomainError when n exceeds max_n.
std::vector<StagePermutation> admissible_permutations(const BottMatrix& lambda, std::size_t max_n = 8);

/// Stable reordering that puts every trivial stage (zero column) first.
/// A zero column has no incoming dependency, so the result is always
/// admissible. Returns the permutation used.
StagePermutation trivial_first_permutation(const BottMatrix& lambda);

/// Stage m is a product stage over B_{m-1}: f_m is even in `ring` and
/// f_m^2 = 0 in H^*(B_{m-1}). Then gamma^w + gamma^{f_m + w} with
/// w = -f_m / 2 is trivial and P(C + gamma^{f_m}) = B_{m-1} x CP^1.
bool stage_bundle_trivial(const BottMatrix& lambda, std::size_t m, CoeffRing ring = CoeffRing::IntegerZ);

/// w = -f_m / 2, the shift of the stage-m tautological class that makes it
/// square to zero. Requires f_m even.
LineClass trivializing_shift(const BottMatrix& lambda, std::size_t m, CoeffRing ring = CoeffRing::IntegerZ);

/// Rewrites the tower with stage m made trivial, or nullopt when the stage
/// is not a product stage. The new generator x'_m = x_m + w replaces x_m;
/// every higher column referencing x_m is re-expressed, so entry (i, j)
/// for i < m < j becomes c_ij + c_mj c_im / 2. When no higher column
/// depends on x_m this is just zeroing column m.
std::optional<BottMatrix> trivialize_stage(const BottMatrix& lambda, std::size_t m,
                                           CoeffRing ring = CoeffRing::IntegerZ);

/// One-twist retwisting over the trivial base (CP^1)^{n-1}:
/// gamma^alpha + C  ~=  gamma^w (gamma^beta + C) with beta = alpha - 2w,
/// applicable iff w (beta + w) = 0. Returns beta or nullopt.
std::optional<LineClass> retwist(const LineClass& alpha, const LineClass& w, CoeffRing ring = CoeffRing::IntegerZ);

/// Moves the unique nonzero column to the last stage. Throws DomainError
/// when more than one column is nonzero.
BottMatrix normalize_last_twist(const BottMatrix& lambda);

}  // namespace bott
