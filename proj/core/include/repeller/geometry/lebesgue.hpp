#pragma once

#include <cstddef>
#include <cstdint>

#include "repeller/geometry/region.hpp"

namespace repeller::geometry {

struct MeasureEstimate {
  double value = 0.0;
  double half_width = 0.0;  // 99% level
  std::size_t hits = 0;
  std::size_t samples = 0;

  double lower() const noexcept { return value - half_width < 0.0 ? 0.0 : value - half_width; }
  double upper() const noexcept { return value + half_width; }
};

/// 99% binomial interval for a hit fraction: exact Clopper-Pearson for up to
/// 30 hits, normal approximation above. Returns {lo, hi} on the fraction.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};
Interval binomial_interval(std::size_t hits, std::size_t n, double level = 0.99);

/// Stratified Monte Carlo estimate of Leb(region). Requires budget >= 1000 and
/// a bounding box of positive volume.
MeasureEstimate lebesgue_estimate(const Region& region, std::size_t budget, std::uint64_t seed);

}  // namespace repeller::geometry
