#include <benchmark/benchmark.h>

#include "repeller/bounds/big_binomial.hpp"
#include "repeller/bounds/inequalities.hpp"

using namespace repeller;

static void BM_Binomial(benchmark::State& state) {
  const auto l = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bounds::binomial(l, l / 3));
}
BENCHMARK(BM_Binomial)->RangeMultiplier(10)->Range(10, 10000);

static void BM_StirlingSweep(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bounds::stirling_sweep(l).failures);
}
BENCHMARK(BM_StirlingSweep)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

static void BM_EntropySweep(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bounds::entropy_sweep(l, bounds::kappa0(1.0), 1.0).failures);
}
BENCHMARK(BM_EntropySweep)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

static void BM_LemmaCell(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bounds::lemma_cell(2000, 10, 0.1).pass);
}
BENCHMARK(BM_LemmaCell);
