#include <benchmark/benchmark.h>

#include "lehmer/ppd.hpp"
#include "lehmer/search.hpp"

using namespace lehmer;

static void BM_CandidateSetGolden(benchmark::State& state) {
  const QuadInt u = QuadInt::make(5, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(candidate_set(u, -1));
}
BENCHMARK(BM_CandidateSetGolden)->Unit(benchmark::kMillisecond);

static void BM_SolveThreshold(benchmark::State& state) {
  const Real c = Real::parse("3.44217");
  for (auto _ : state) benchmark::DoNotOptimize(solve_g_threshold(c));
}
BENCHMARK(BM_SolveThreshold)->Unit(benchmark::kMicrosecond);

static void BM_EnumerateUnits(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_units(-1, Rational(state.range(0))));
}
BENCHMARK(BM_EnumerateUnits)->Arg(13)->Arg(100)->Unit(benchmark::kMicrosecond);

static void BM_ZsigmondyGolden(benchmark::State& state) {
  const QuadInt u = QuadInt::make(5, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(zsigmondy(u));
}
BENCHMARK(BM_ZsigmondyGolden)->Unit(benchmark::kMillisecond);
