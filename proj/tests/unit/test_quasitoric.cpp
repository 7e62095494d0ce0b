#include <gtest/gtest.h>

#include "bott/quasitoric.hpp"
#include "support.hpp"

namespace bott {
namespace {

using testing::all_permutations;
using testing::leibniz_determinant;
using testing::random_bott;
using testing::random_sparse_bott;
using testing::rng_for;
using testing::uniform;

IntegerMatrix permute(const IntegerMatrix& m, const std::vector<std::size_t>& p) {
  IntegerMatrix out(m.size(), std::vector<Integer>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out[p[i]][p[j]] = m[i][j];
  }
  return out;
}

bool some_permutation_triangularizes(const CharMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& p : all_permutations(n)) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = 0; j < n && ok; ++j) ok = i == j || m(i, j) == 0 || p[i] < p[j];
    }
    if (ok) return true;
  }
  return false;
}

std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

TEST(Quasitoric, ValidateExamples) {
  EXPECT_TRUE(validate_characteristic(CharMatrix::from_int_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
  EXPECT_FALSE(validate_characteristic(CharMatrix::from_int_rows({{1, 1}, {1, 1}})));
  EXPECT_FALSE(validate_characteristic(CharMatrix::from_int_rows({{1, 1}, {-1, 1}})));
}

TEST(Quasitoric, RowSignNormalization) {
  const auto m = CharMatrix::from_int_rows({{-1, -1}, {0, 1}});
  EXPECT_EQ(m, CharMatrix::from_int_rows({{1, 1}, {0, 1}}));
  EXPECT_THROW(CharMatrix::from_int_rows({{0, 1}, {0, 1}}), DomainError);
  EXPECT_THROW(CharMatrix::from_int_rows({{2, 1}, {0, 1}}), DomainError);
  EXPECT_THROW(CharMatrix::from_int_rows({{1, 1}}), DomainError);
}

TEST(Quasitoric, PrincipalMinorsMatchLeibniz) {
  auto rng = rng_for(50);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 5));
    IntegerMatrix m(n, std::vector<Integer>(n));
    for (auto& r : m) {
      for (auto& x : r) x = uniform(rng, -3, 3);
    }
    const auto minors = principal_minors(m, Execution::Serial);
    ASSERT_EQ(minors, principal_minors(m, Execution::Parallel));
    for (std::size_t mask = 0; mask < minors.size(); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) idx.push_back(i);
      }
      IntegerMatrix sub(idx.size(), std::vector<Integer>(idx.size()));
      for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = 0; b < idx.size(); ++b) sub[a][b] = m[idx[a]][idx[b]];
      }
      ASSERT_EQ(minors[mask], leibniz_determinant(sub));
    }
  }
}

TEST(Quasitoric, IsBottExamples) {
  const auto upper = CharMatrix::from_int_rows({{1, 2, -1}, {0, 1, 3}, {0, 0, 1}});
  const auto r = is_bott(upper);
  EXPECT_TRUE(r.is_bott);
  EXPECT_EQ(*r.sigma, StagePermutation::identity(3));

  const auto two_cycle = CharMatrix::from_int_rows({{1, 1}, {2, 1}});
  ASSERT_TRUE(validate_characteristic(two_cycle));
  const auto r2 = is_bott(two_cycle);
  EXPECT_FALSE(r2.is_bott);
  EXPECT_EQ(r2.cycle.size(), 2u);

  const auto three_cycle = CharMatrix::from_int_rows({{1, 1, 0}, {0, 1, 1}, {-2, 0, 1}});
  ASSERT_TRUE(validate_characteristic(three_cycle));
  const auto r3 = is_bott(three_cycle);
  EXPECT_FALSE(r3.is_bott);
  EXPECT_EQ(r3.cycle, (std::vector<std::size_t>{1, 2, 0}));

  EXPECT_THROW(is_bott(CharMatrix::from_int_rows({{1, 1}, {1, 1}})), DomainError);
}

TEST(Quasitoric, ReportedCyclesAreCycles) {
  auto rng = rng_for(51);
  std::size_t rejected = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 2, 5));
    IntegerMatrix m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = i == j ? 1 : (uniform(rng, 0, 3) == 0 ? uniform(rng, -2, 2) : 0);
    }
    const auto c = CharMatrix::from_rows(m);
    if (!validate_characteristic(c)) continue;
    const auto r = is_bott(c);
    ASSERT_EQ(r.is_bott, some_permutation_triangularizes(c));
    if (r.is_bott) continue;
    ++rejected;
    ASSERT_GE(r.cycle.size(), 2u);
    for (std::size_t k = 0; k < r.cycle.size(); ++k) {
      ASSERT_NE(c(r.cycle[k], r.cycle[(k + 1) % r.cycle.size()]), 0);
    }
  }
  EXPECT_GT(rejected, 10u);
}

TEST(Quasitoric, AcyclicIffTriangularizable) {
  auto rng = rng_for(52);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 6));
    const BottMatrix lambda = random_sparse_bott(rng, n, 2);
    const auto p = random_permutation(rng, n);
    const auto scrambled = CharMatrix::from_rows(permute(from_bott_matrix(lambda).rows(), p));
    ASSERT_TRUE(some_permutation_triangularizes(scrambled));
    const auto r = is_bott(scrambled);
    ASSERT_TRUE(r.is_bott);
    const auto minors = principal_minors(scrambled.rows());
    ASSERT_TRUE(std::all_of(minors.begin(), minors.end(), [](const Integer& d) { return d == 1; }));
  }
}

TEST(Quasitoric, ConversionExamples) {
  EXPECT_EQ(to_bott_matrix(CharMatrix::from_int_rows({{1, 0}, {0, 1}}), StagePermutation::identity(2)),
            BottMatrix(2));
  const auto h = BottMatrix::from_int_rows({{0, 1}, {0, 0}});
  EXPECT_EQ(from_bott_matrix(h), CharMatrix::from_int_rows({{1, 1}, {0, 1}}));
  EXPECT_EQ(to_bott_matrix(from_bott_matrix(h), StagePermutation::identity(2)), h);
  const auto m3 = CharMatrix::from_int_rows({{1, 4, -5}, {0, 1, 6}, {0, 0, 1}});
  EXPECT_EQ(to_bott_matrix(m3, StagePermutation::identity(3)),
            BottMatrix::from_int_rows({{0, 4, -5}, {0, 0, 6}, {0, 0, 0}}));
  EXPECT_THROW(to_bott_matrix(m3, StagePermutation::from_order({2, 1, 0})), DomainError);
}

TEST(Quasitoric, RoundtripRecoversTheMatrix) {
  auto rng = rng_for(53);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 6));
    const BottMatrix lambda = random_bott(rng, n, 3);
    const CharMatrix m = from_bott_matrix(lambda);
    ASSERT_EQ(to_bott_matrix(m, StagePermutation::identity(n)), lambda);
    const auto r = is_bott(m);
    ASSERT_TRUE(r.is_bott);
    ASSERT_EQ(to_bott_matrix(m, *r.sigma), lambda);
  }
}

TEST(Quasitoric, ScrambledRoundtripIsAConjugate) {
  auto rng = rng_for(54);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(uniform(rng, 1, 6));
    const BottMatrix lambda = random_sparse_bott(rng, n, 3);
    const auto p = random_permutation(rng, n);
    const auto scrambled = CharMatrix::from_rows(permute(from_bott_matrix(lambda).rows(), p));
    const auto r = is_bott(scrambled);
    ASSERT_TRUE(r.is_bott);
    const StagePermutation pi{p};
    ASSERT_EQ(to_bott_matrix(scrambled, *r.sigma), conjugate(lambda, *r.sigma * pi));
  }
}

TEST(Quasitoric, BqStructureHoldsForRandomTowers) {
  EXPECT_TRUE(bq_structure_check(BottMatrix(3)));
  auto rng = rng_for(55);
  for (int trial = 0; trial < 1000; ++trial) ASSERT_TRUE(bq_structure_check(random_bott(rng, 5, 3)));
}

TEST(Quasitoric, CyclicMinorClosedForm) {
  auto rng = rng_for(56);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t k = static_cast<std::size_t>(uniform(rng, 2, 6));
    std::vector<Integer> h(k);
    for (auto& x : h) x = uniform(rng, -3, 3);
    const auto m = cyclic_matrix(h);
    ASSERT_EQ(cyclic_minor(h), bareiss_determinant(m));
    ASSERT_EQ(cyclic_minor(h), leibniz_determinant(m));
  }
  EXPECT_EQ(cyclic_minor({1, 2}), -1);
  EXPECT_EQ(cyclic_minor({1, 1, -2}), -1);
  EXPECT_THROW(cyclic_minor({1}), DomainError);
}

}  // namespace
}  // namespace bott
