#include <benchmark/benchmark.h>

#include "repeller/families/escape.hpp"
#include "repeller/families/registry.hpp"
#include "repeller/geometry/box_count.hpp"

using namespace repeller;

static void BM_EscapeCoverHopf2D(benchmark::State& state) {
  families::FamilySpec spec;
  spec.mu = 0.05;
  const auto model = families::make_model(spec);
  geometry::EscapeCoverOptions o;
  o.level = static_cast<int>(state.range(0));
  o.samples_per_box = 16;
  o.max_doublings = 0;
  const auto survives = families::survival_test(*model, 100);
  for (auto _ : state) benchmark::DoNotOptimize(geometry::escape_cover(2, survives, o).cover.count());
  state.counters["boxes"] = static_cast<double>(std::size_t{1} << (2 * o.level));
}
BENCHMARK(BM_EscapeCoverHopf2D)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

static void BM_LadderCounts(benchmark::State& state) {
  geometry::GridCover c(2, 2, static_cast<int>(state.range(0)));
  for (std::size_t i = 0; i < c.cells(); i += 3) c.mark(i);
  for (auto _ : state) benchmark::DoNotOptimize(geometry::ladder_counts(c, 1));
}
BENCHMARK(BM_LadderCounts)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);
