#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bott/bott_matrix.hpp"

// Exhaustive searches over Z/m for a prime power m. Any change of
// generators over Z (or over Z_(2) when m is a power of 2) reduces to one
// over Z/m, so a modular search that finds nothing is a proof.
namespace bott::modular {

using Residues = std::vector<long>;

/// (p, e) with m = p^e, or nullopt.
std::optional<std::pair<long, int>> prime_power(long m);

/// Bott matrix with entries reduced mod m = p^e, stored in [0, m).
struct Tower {
  long m = 0;
  long p = 0;
  int e = 0;
  std::size_t n = 0;
  std::vector<long> c;

  long operator()(std::size_t i, std::size_t j) const { return c[i * n + j]; }
};

/// Throws DomainError when m is not a prime power or an entry has a
/// denominator sharing a factor with m.
Tower reduce(const BottMatrix& lambda, long m);

long reduce_rational(const Rational& value, long m);

/// Coefficients of v^2 and u v on x_i x_j (i < j), mod m, in pair_index order.
Residues square(const Tower& t, const Residues& v);
Residues product(const Tower& t, const Residues& u, const Residues& v);

/// p-adic valuation of x in Z/p^e, with valuation e for 0.
int valuation(long x, long p, int e);

/// Whether a d = b has a solution mod p^e. Diagonalizes a with
/// minimal-valuation pivots (row operations carry b along).
bool solvable(std::vector<Residues> a, Residues b, long p, int e);

/// Is there an invertible change of generators over Z/m carrying the
/// relations of b into the ring of a? nullopt when the budget ran out.
std::optional<bool> isomorphic(const Tower& a, const Tower& b, std::size_t budget);

/// Least count c < limit of generators with nonzero square over Z/m, or
/// limit when there is none. nullopt when the budget ran out.
std::optional<std::size_t> complexity(const Tower& t, std::size_t limit, std::size_t budget);

}  // namespace bott::modular
