#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace repeller::geometry {

struct ScaleCount {
  double epsilon = 0.0;
  std::size_t count = 0;
};

struct DimensionEstimate {
  std::vector<ScaleCount> scales;  // sorted by decreasing epsilon
  double slope = 0.0;              // clamped to [0, dim]
  double raw_slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;           // RMS of the regression residuals
  double ci_half_width = 0.0;      // 95% Student-t
  bool flat_warning = false;
  bool clamped = false;
  int dim = 0;
};

/// Least-squares slope of log count against |log eps|.
/// Throws std::invalid_argument on fewer than 3 scales, a span under a factor
/// of 8, nonpositive counts, or counts increasing with eps.
DimensionEstimate box_dimension(std::span<const ScaleCount> counts, int dim);

/// {"records":[{epsilon,count,slope,ci}...], "residual", "flat_warning", ...}
std::string to_json(const DimensionEstimate& est);

}  // namespace repeller::geometry
