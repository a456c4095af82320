#include <benchmark/benchmark.h>

#include "repeller/families/hopf2d.hpp"
#include "repeller/holes/census.hpp"

using namespace repeller;

static void BM_CensusHopf2D(benchmark::State& state) {
  families::Hopf2DParams p;
  p.mu = 0.1;
  const families::HopfModel2D m(p);
  holes::CensusOptions o;
  o.samples = static_cast<std::size_t>(state.range(1));
  o.outer_covers = false;
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(holes::run_census(m, n, m.c0() * m.hole_volume(), o).kept_total());
  state.SetItemsProcessed(state.iterations() * state.range(1));
}
BENCHMARK(BM_CensusHopf2D)->Args({6, 20000})->Args({12, 20000})->Args({12, 100000})->Unit(benchmark::kMillisecond);
