#include <benchmark/benchmark.h>

#include "ncmetric/commutative.hpp"
#include "ncmetric/matrix_geometry.hpp"

using namespace ncmetric;

static void BM_ThreePoint(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(three_point_distance(1.0, 0.7, 1.6));
}
BENCHMARK(BM_ThreePoint);

static void BM_ThreePointInverse(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(three_point_inverse(1.0, 0.9, 1.1));
}
BENCHMARK(BM_ThreePointInverse);

static void BM_FourPointSpecial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(four_point_special(1.0, 1.3, 0.8, 2.0));
}
BENCHMARK(BM_FourPointSpecial);

static void BM_FourPointGeneral(benchmark::State& state) {
  FourPointCoeffs c;
  c.d5 = std::numeric_limits<double>::infinity();
  for (auto _ : state) benchmark::DoNotOptimize(four_point_general(c));
}
BENCHMARK(BM_FourPointGeneral)->Unit(benchmark::kMillisecond);

static void BM_MetricToTriple(benchmark::State& state) {
  RealMatrix d(4, 4);
  d << 0, 1, 1.5, 2, 1, 0, 1, 1.5, 1.5, 1, 0, 1, 2, 1.5, 1, 0;
  for (auto _ : state) benchmark::DoNotOptimize(metric_to_triple(d));
}
BENCHMARK(BM_MetricToTriple);

BENCHMARK_MAIN();
