#include <benchmark/benchmark.h>

#include "lehmer/cyclo.hpp"
#include "lehmer/seqkit.hpp"

using namespace lehmer;

static void BM_DeltaClosedForm(benchmark::State& state) {
  const QuadInt u = QuadInt::make(5, 1, 1);
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delta(u, n));
}
BENCHMARK(BM_DeltaClosedForm)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_DeltaDirect(benchmark::State& state) {
  const QuadInt u = QuadInt::make(5, 1, 1);
  const auto n = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(delta_direct(u, n));
}
BENCHMARK(BM_DeltaDirect)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_NormCyclotomic(benchmark::State& state) {
  const QuadInt u = QuadInt::make(2, 2, 2);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  cyclotomic_poly(n);
  for (auto _ : state) benchmark::DoNotOptimize(norm_cyclotomic(u, n));
}
BENCHMARK(BM_NormCyclotomic)->Arg(36)->Arg(90)->Arg(210);
