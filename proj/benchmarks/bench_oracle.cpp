#include <benchmark/benchmark.h>

#include <complex>

#include "ncmetric/commutative.hpp"
#include "ncmetric/matrix_geometry.hpp"
#include "ncmetric/oracle.hpp"

using namespace ncmetric;

static void BM_OracleRegular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const DistanceOracle o(commutative_triple(regular_dirac(n, 1.3)));
  for (auto _ : state) benchmark::DoNotOptimize(o.distance(PureState::canonical(0), PureState::canonical(1)));
}
BENCHMARK(BM_OracleRegular)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

static void BM_OracleFourPointCycle(benchmark::State& state) {
  const DistanceOracle o(commutative_triple(four_point_dirac(FourPointCoeffs::cycle(1.0, 1.3, 0.8, 2.0))));
  for (auto _ : state) benchmark::DoNotOptimize(o.distance(PureState::canonical(0), PureState::canonical(2)));
}
BENCHMARK(BM_OracleFourPointCycle)->Unit(benchmark::kMillisecond);

static void BM_OracleSphere(benchmark::State& state) {
  const DistanceOracle o(m2_triple(1.0, -0.5));
  ComplexVector a(2), b(2);
  a << std::sqrt(0.7), std::sqrt(0.3);
  b << std::sqrt(0.7), std::polar(std::sqrt(0.3), 2.0);
  const PureState sa = PureState::vector_state(0, a), sb = PureState::vector_state(0, b);
  for (auto _ : state) benchmark::DoNotOptimize(o.distance(sa, sb));
}
BENCHMARK(BM_OracleSphere)->Unit(benchmark::kMillisecond);

static void BM_DistanceMatrixThreads(benchmark::State& state) {
  const SpectralTriple t = commutative_triple(regular_dirac(7, 1.0));
  OracleOptions opts;
  opts.threads = static_cast<int>(state.range(0));
  const std::vector<PureState> states = point_states(7);
  for (auto _ : state) benchmark::DoNotOptimize(distance_matrix(t, states, opts));
}
BENCHMARK(BM_DistanceMatrixThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
