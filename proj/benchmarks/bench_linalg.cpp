#include <benchmark/benchmark.h>

#include <random>

#include "ncmetric/linalg.hpp"

using namespace ncmetric;

static ComplexMatrix random_hermitian(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
  return a + a.adjoint();
}

static void BM_OperatorNorm(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const ComplexMatrix a = random_hermitian(state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(operator_norm(a));
}
BENCHMARK(BM_OperatorNorm)->RangeMultiplier(2)->Range(2, 64);

static void BM_Commutator(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const HermitianMatrix d(random_hermitian(state.range(0), rng));
  const ComplexMatrix a = random_hermitian(state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(commutator(d, a));
}
BENCHMARK(BM_Commutator)->RangeMultiplier(2)->Range(2, 64);

BENCHMARK_MAIN();
