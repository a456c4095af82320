#include <benchmark/benchmark.h>

#include <vector>

#include "repeller/families/hopf2d.hpp"
#include "repeller/families/toys.hpp"
#include "repeller/holes/cylinder.hpp"

using namespace repeller;

static void BM_PullbackTripling(benchmark::State& state) {
  const families::TriplingToy f;
  const holes::CylinderWord w(std::vector<int>(static_cast<std::size_t>(state.range(0)), 1), 2);
  for (auto _ : state) benchmark::DoNotOptimize(holes::pullback_cover(f, w, 3, 8).count());
}
BENCHMARK(BM_PullbackTripling)->Arg(2)->Arg(6);

static void BM_PullbackHopfDegenerate(benchmark::State& state) {
  families::Hopf2DParams p;
  p.mu = 0.05;
  const families::HopfModel2D m(p);
  const holes::CylinderWord w(std::vector<int>(static_cast<std::size_t>(state.range(0)), 0), 10);
  for (auto _ : state) benchmark::DoNotOptimize(holes::pullback_cover(m, w, 2, 7).count());
}
BENCHMARK(BM_PullbackHopfDegenerate)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_RefineCylinder(benchmark::State& state) {
  families::Hopf2DParams p;
  p.mu = 0.05;
  const families::HopfModel2D m(p);
  const holes::CylinderWord w({3, 0, 0, 7}, 10);
  for (auto _ : state) benchmark::DoNotOptimize(holes::refine_cylinder(m, w).volume_hi);
}
BENCHMARK(BM_RefineCylinder)->Unit(benchmark::kMillisecond);
