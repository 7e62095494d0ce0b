#include <gtest/gtest.h>

#include "bott/linalg.hpp"
#include "bott/modular.hpp"
#include "support.hpp"

namespace bott {
namespace {

using testing::leibniz_determinant;
using testing::rng_for;
using testing::uniform;

IntegerMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  IntegerMatrix m(rows, std::vector<Integer>(cols));
  for (auto& r : m) {
    for (auto& x : r) x = uniform(rng, -bound, bound);
  }
  return m;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out;
  for (const auto& r : m) out.emplace_back(r.begin(), r.end());
  return out;
}

// Exhaustive search for an integral solution in a box.
bool box_solvable(const RationalMatrix& a, const std::vector<Rational>& b, long box) {
  const std::size_t k = a.empty() ? 0 : a[0].size();
  std::vector<long> x(k, -box);
  while (true) {
    bool ok = true;
    for (std::size_t r = 0; r < a.size() && ok; ++r) {
      Rational s = 0;
      for (std::size_t c = 0; c < k; ++c) s += a[r][c] * x[c];
      ok = s == b[r];
    }
    if (ok) return true;
    std::size_t c = 0;
    while (c < k && x[c] == box) x[c++] = -box;
    if (c == k) return false;
    ++x[c];
  }
}

bool satisfies(const RationalMatrix& a, const std::vector<Rational>& b, const std::vector<Rational>& x) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < x.size(); ++c) s += a[r][c] * x[c];
    if (s != b[r]) return false;
  }
  return true;
}

TEST(Linalg, DeterminantsMatchLeibniz) {
  auto rng = rng_for(10);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 0, 5));
    const IntegerMatrix m = random_integer_matrix(rng, n, n, 4);
    const Integer expected = leibniz_determinant(m);
    ASSERT_EQ(bareiss_determinant(m), expected);
    ASSERT_EQ(determinant(to_rational(m)), Rational(expected));
  }
}

TEST(Linalg, RankOfSmallExamples) {
  EXPECT_EQ(rank({{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank({{1, 0}, {0, 1}}), 2u);
  EXPECT_EQ(rank({{0, 0}, {0, 0}}), 0u);
}

TEST(Linalg, ExtendableToUnimodular) {
  EXPECT_TRUE(extendable_to_unimodular({{1, 2, 3}}, CoeffRing::IntegerZ));
  EXPECT_FALSE(extendable_to_unimodular({{2, 4, 6}}, CoeffRing::IntegerZ));
  EXPECT_TRUE(extendable_to_unimodular({{2, 3}}, CoeffRing::IntegerZ));
  EXPECT_FALSE(extendable_to_unimodular({{3, 3}}, CoeffRing::IntegerZ));
  EXPECT_TRUE(extendable_to_unimodular({{3, 3}}, CoeffRing::TwoLocalZ));
  EXPECT_TRUE(extendable_to_unimodular({{2, 4}}, CoeffRing::RationalQ));
  EXPECT_FALSE(extendable_to_unimodular({{1, 1}, {2, 2}}, CoeffRing::RationalQ));
}

TEST(Linalg, SolversAgreeWithBoxSearch) {
  auto rng = rng_for(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(uniform(rng, 1, 3));
    const std::size_t cols = static_cast<std::size_t>(uniform(rng, 1, 3));
    const RationalMatrix a = to_rational(random_integer_matrix(rng, rows, cols, 3));
    std::vector<Rational> b(rows);
    for (auto& x : b) x = uniform(rng, -4, 4);
    const bool decided = solvable_in_ring(a, b, CoeffRing::IntegerZ);
    const auto solution = solve_in_ring(a, b, CoeffRing::IntegerZ);
    ASSERT_EQ(decided, solution.has_value());
    if (solution) {
      ASSERT_TRUE(satisfies(a, b, *solution));
      for (const auto& x : *solution) ASSERT_TRUE(in_ring(x, CoeffRing::IntegerZ));
    }
    if (box_solvable(a, b, 6)) ASSERT_TRUE(decided);
  }
}

TEST(Linalg, LocalAndRationalSolvers) {
  EXPECT_FALSE(solvable_in_ring({{2}}, {1}, CoeffRing::IntegerZ));
  EXPECT_FALSE(solvable_in_ring({{2}}, {1}, CoeffRing::TwoLocalZ));
  EXPECT_TRUE(solvable_in_ring({{3}}, {1}, CoeffRing::TwoLocalZ));
  EXPECT_FALSE(solvable_in_ring({{3}}, {1}, CoeffRing::IntegerZ));
  EXPECT_TRUE(solvable_in_ring({{2}}, {1}, CoeffRing::RationalQ));
  auto rng = rng_for(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(uniform(rng, 1, 3));
    const std::size_t cols = static_cast<std::size_t>(uniform(rng, 1, 3));
    const RationalMatrix a = to_rational(random_integer_matrix(rng, rows, cols, 4));
    std::vector<Rational> b(rows);
    for (auto& x : b) x = uniform(rng, -4, 4);
    for (CoeffRing ring : {CoeffRing::TwoLocalZ, CoeffRing::RationalQ}) {
      const auto solution = solve_in_ring(a, b, ring);
      ASSERT_EQ(solvable_in_ring(a, b, ring), solution.has_value());
      if (solution) {
        ASSERT_TRUE(satisfies(a, b, *solution));
        for (const auto& x : *solution) ASSERT_TRUE(in_ring(x, ring));
      }
    }
    // An integral solution is also a local and a rational one.
    if (solvable_in_ring(a, b, CoeffRing::IntegerZ)) {
      ASSERT_TRUE(solvable_in_ring(a, b, CoeffRing::TwoLocalZ));
      ASSERT_TRUE(solvable_in_ring(a, b, CoeffRing::RationalQ));
    }
  }
}

TEST(Modular, PrimePowers) {
  EXPECT_EQ(modular::prime_power(8), std::make_pair(2L, 3));
  EXPECT_EQ(modular::prime_power(9), std::make_pair(3L, 2));
  EXPECT_EQ(modular::prime_power(7), std::make_pair(7L, 1));
  EXPECT_FALSE(modular::prime_power(6).has_value());
  EXPECT_FALSE(modular::prime_power(1).has_value());
}

TEST(Modular, ReduceRationalInvertsOddDenominators) {
  EXPECT_EQ(modular::reduce_rational(Rational(1, 3), 8), 3);  // 3 * 3 = 9 = 1 mod 8
  EXPECT_EQ(modular::reduce_rational(Rational(-1), 4), 3);
  EXPECT_THROW(modular::reduce_rational(Rational(1, 2), 4), DomainError);
  EXPECT_THROW(modular::reduce(BottMatrix(2), 6), DomainError);
}

TEST(Modular, SolvableMatchesExhaustiveSearch) {
  auto rng = rng_for(13);
  for (long m : {2L, 3L, 4L, 8L, 9L}) {
    const auto [p, e] = *modular::prime_power(m);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t rows = static_cast<std::size_t>(uniform(rng, 1, 3));
      const std::size_t cols = static_cast<std::size_t>(uniform(rng, 1, 2));
      std::vector<modular::Residues> a(rows, modular::Residues(cols));
      modular::Residues b(rows);
      for (auto& r : a) {
        for (auto& x : r) x = uniform(rng, 0, m - 1);
      }
      for (auto& x : b) x = uniform(rng, 0, m - 1);
      bool found = false;
      std::vector<long> d(cols, 0);
      while (!found) {
        bool ok = true;
        for (std::size_t r = 0; r < rows && ok; ++r) {
          long s = 0;
          for (std::size_t c = 0; c < cols; ++c) s += a[r][c] * d[c];
          ok = (s - b[r]) % m == 0;
        }
        found = ok;
        std::size_t c = 0;
        while (c < cols && d[c] == m - 1) d[c++] = 0;
        if (c == cols) break;
        ++d[c];
      }
      ASSERT_EQ(modular::solvable(a, b, p, e), found) << "m=" << m;
    }
  }
}

TEST(Modular, SquareAndProductMatchIntegerClosedForms) {
  auto rng = rng_for(14);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 4));
    const BottMatrix lambda = testing::random_bott(rng, n, 3);
    std::vector<long> uv(n), vv(n);
    for (auto& x : uv) x = uniform(rng, -5, 5);
    for (auto& x : vv) x = uniform(rng, -5, 5);
    for (long m : {4L, 3L, 8L}) {
      const auto t = modular::reduce(lambda, m);
      modular::Residues ur(n), vr(n);
      for (std::size_t i = 0; i < n; ++i) {
        ur[i] = modular::reduce_rational(Rational(uv[i]), m);
        vr[i] = modular::reduce_rational(Rational(vv[i]), m);
      }
      const auto sq = square_coefficients(lambda, LineClass::from_ints(vv));
      const auto pr = product_coefficients(lambda, LineClass::from_ints(uv), LineClass::from_ints(vv));
      const auto msq = modular::square(t, vr);
      const auto mpr = modular::product(t, ur, vr);
      for (std::size_t k = 0; k < sq.size(); ++k) {
        ASSERT_EQ(msq[k], modular::reduce_rational(sq[k], m));
        ASSERT_EQ(mpr[k], modular::reduce_rational(pr[k], m));
      }
    }
  }
}

TEST(Modular, ValuationOfZeroIsExponent) {
  EXPECT_EQ(modular::valuation(0, 2, 3), 3);
  EXPECT_EQ(modular::valuation(4, 2, 3), 2);
  EXPECT_EQ(modular::valuation(3, 3, 2), 1);
  EXPECT_EQ(modular::valuation(5, 3, 2), 0);
}

}  // namespace
}  // namespace bott
