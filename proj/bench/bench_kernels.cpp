// Serial reference vs OpenMP paths of the three parallel kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "bott/one_twist.hpp"
#include "bott/quasitoric.hpp"
#include "bott/twist_analysis.hpp"

namespace {

using namespace bott;

Execution execution_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::Serial : Execution::Parallel;
}

IntegerMatrix random_characteristic(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-3, 3);
  IntegerMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) m[i][j] = entry(rng);
  }
  return m;
}

void BM_PrincipalMinors(benchmark::State& state) {
  const auto m = random_characteristic(static_cast<std::size_t>(state.range(0)), 7);
  const Execution exec = execution_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(principal_minors(m, exec));
  state.SetLabel(exec == Execution::Serial ? "serial" : "parallel");
}
BENCHMARK(BM_PrincipalMinors)->ArgsProduct({{10, 12, 14}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_ClassifyOneTwist(benchmark::State& state) {
  const auto corpus = one_twist_corpus(static_cast<std::size_t>(state.range(0)), 2);
  const Execution exec = execution_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(classify(corpus, exec));
  state.SetLabel(exec == Execution::Serial ? "serial" : "parallel");
}
BENCHMARK(BM_ClassifyOneTwist)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_RingIsomorphic(benchmark::State& state) {
  // A non-isomorphic pair, so no branch of the search stops early.
  const auto a = BottMatrix::from_int_rows({{0, 1, 1, 0}, {0, 0, 2, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}});
  const auto b = BottMatrix::from_int_rows({{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}});
  OracleOptions options;
  options.execution = execution_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(ring_isomorphic(a, b, options));
  state.SetLabel(options.execution == Execution::Serial ? "serial" : "parallel");
}
BENCHMARK(BM_RingIsomorphic)->ArgsProduct({{4}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
