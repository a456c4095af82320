#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "repeller/geometry/grid_cover.hpp"
#include "repeller/geometry/rng.hpp"
#include "repeller/geometry/torus.hpp"

namespace repeller::geometry {

/// Draws one point of the set being measured.
using PointSampler = std::function<TorusPoint(Rng&)>;

/// Grid cover built from `budget` sampled points. Samples are drawn in fixed
/// blocks with per-block streams so the result does not depend on `jobs`.
GridCover sample_cover(int dim, const PointSampler& sampler, double eps, std::size_t budget,
                       std::uint64_t seed, unsigned jobs = 1);

/// Number of eps-boxes hit by `budget` samples of X. A lower bound for the
/// grid-cover count of X that converges to it as the budget grows.
std::size_t box_count(int dim, const PointSampler& sampler, double eps, std::size_t budget,
                      std::uint64_t seed, unsigned jobs = 1);

/// Decides whether an orbit started at a point survives (never enters the trap).
using SurvivalTest = std::function<bool(const TorusPoint&)>;

struct EscapeCoverOptions {
  int base = 2;
  int level = 8;
  /// Initial samples per box; jittered on a k^d sub-lattice.
  std::size_t samples_per_box = 64;
  /// Boxes still empty are resampled with doubled density until the total
  /// count changes by less than this relative amount.
  double tolerance = 0.005;
  int max_doublings = 3;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

struct EscapeCoverResult {
  GridCover cover;
  std::size_t evaluations = 0;
  int doublings = 0;
};

/// Survivor grid: a box is occupied when one of its samples survives.
EscapeCoverResult escape_cover(int dim, const SurvivalTest& survives, const EscapeCoverOptions& opts);

/// (eps, count) pairs for levels [min_level, finest.level()] by OR-coarsening.
std::vector<std::pair<double, std::size_t>> ladder_counts(const GridCover& finest, int min_level);

}  // namespace repeller::geometry
