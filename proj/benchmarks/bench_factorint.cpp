#include <benchmark/benchmark.h>

#include <random>

#include "lehmer/factorint.hpp"
#include "lehmer/seqkit.hpp"

using namespace lehmer;

static void BM_FactorizeRandom64(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<Integer> inputs;
  for (int i = 0; i < 256; ++i) {
    const std::uint64_t v = rng() | 1u;
    Integer z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
    inputs.push_back(z);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_FactorizeRandom64);

static void BM_FactorizeDelta(benchmark::State& state) {
  const Integer value = delta(QuadInt::make(5, 1, 1), static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(factorize(value));
}
BENCHMARK(BM_FactorizeDelta)->Arg(24)->Arg(36)->Arg(60)->Arg(90)->Unit(benchmark::kMicrosecond);

static void BM_IsPrime(benchmark::State& state) {
  const Integer p("170141183460469231731687303715884105727");
  for (auto _ : state) benchmark::DoNotOptimize(is_prime(p));
}
BENCHMARK(BM_IsPrime);
