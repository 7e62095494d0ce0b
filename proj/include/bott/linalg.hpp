#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bott/scalar.hpp"

namespace bott {

using RationalMatrix = std::vector<std::vector<Rational>>;
using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Gaussian elimination over Q.
Rational determinant(RationalMatrix m);

/// Fraction-free (Bareiss) elimination; exact over Z.
Integer bareiss_determinant(IntegerMatrix m);

std::size_t rank(RationalMatrix m);

/// Minor of m on the given row and column index sets.
Rational minor(const RationalMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);

/// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k);

/// True when the k x n matrix `rows` (k <= n) can be completed to a matrix
/// whose determinant is a unit of `ring`: gcd of maximal minors is 1 over Z,
/// some maximal minor is odd over Z_(2), rank k over Q.
bool extendable_to_unimodular(const RationalMatrix& rows, CoeffRing ring);

/// Whether a x = b has a solution with all x_i in `ring`. Over Z and Z_(2)
/// this compares the r-th determinantal divisors of A and [A | b], which
/// decides solvability over a principal ideal domain.
bool solvable_in_ring(const RationalMatrix& a, const std::vector<Rational>& b, CoeffRing ring);

/// A solution of a x = b with entries in `ring`, found by reducing the
/// columns of a to echelon form with ring-unimodular column operations
/// (Euclid steps over Z, minimal-valuation pivots over Z_(2)). Free
/// variables are set to zero.
std::optional<std::vector<Rational>> solve_in_ring(const RationalMatrix& a, const std::vector<Rational>& b,
                                                   CoeffRing ring);

}  // namespace bott
