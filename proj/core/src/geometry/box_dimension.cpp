#include "repeller/geometry/box_dimension.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>
#include <json.hpp>

namespace repeller::geometry {

DimensionEstimate box_dimension(std::span<const ScaleCount> counts, int dim) {
  if (counts.size() < 3) throw std::invalid_argument("box_dimension: at least 3 scales required");
  DimensionEstimate est;
  est.dim = dim;
  est.scales.assign(counts.begin(), counts.end());
  std::sort(est.scales.begin(), est.scales.end(),
            [](const ScaleCount& a, const ScaleCount& b) { return a.epsilon > b.epsilon; });
  for (std::size_t i = 0; i < est.scales.size(); ++i) {
    const auto& s = est.scales[i];
    if (!(s.epsilon > 0.0)) throw std::invalid_argument("box_dimension: epsilon must be positive");
    if (s.count == 0) throw std::invalid_argument("box_dimension: zero count");
    if (i > 0 && s.epsilon == est.scales[i - 1].epsilon)
      throw std::invalid_argument("box_dimension: repeated scale");
    if (i > 0 && s.count < est.scales[i - 1].count)
      throw std::invalid_argument("box_dimension: counts must be nonincreasing in epsilon");
  }
  if (est.scales.front().epsilon / est.scales.back().epsilon < 8.0 * (1.0 - 1e-12))
    throw std::invalid_argument("box_dimension: scales must span at least a factor of 8");

  const auto n = static_cast<double>(est.scales.size());
  double sx = 0, sy = 0;
  for (const auto& s : est.scales) {
    sx += -std::log(s.epsilon);
    sy += std::log(static_cast<double>(s.count));
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& s : est.scales) {
    const double x = -std::log(s.epsilon) - mx;
    sxx += x * x;
    sxy += x * (std::log(static_cast<double>(s.count)) - my);
  }
  est.raw_slope = sxy / sxx;
  est.intercept = my - est.raw_slope * mx;
  double rss = 0;
  for (const auto& s : est.scales) {
    const double r = std::log(static_cast<double>(s.count)) - (est.intercept + est.raw_slope * -std::log(s.epsilon));
    rss += r * r;
  }
  est.residual = std::sqrt(rss / n);
  const double se = std::sqrt(rss / (n - 2.0) / sxx);
  boost::math::students_t t(n - 2.0);
  est.ci_half_width = boost::math::quantile(boost::math::complement(t, 0.025)) * se;

  est.flat_warning = est.scales.front().count == est.scales.back().count;
  est.slope = std::clamp(est.raw_slope, 0.0, static_cast<double>(dim));
  est.clamped = est.slope != est.raw_slope;
  if (est.flat_warning) est.slope = 0.0;
  return est;
}

std::string to_json(const DimensionEstimate& est) {
  nlohmann::ordered_json j;
  j["dim"] = est.dim;
  j["slope"] = est.slope;
  j["ci"] = est.ci_half_width;
  j["residual"] = est.residual;
  j["flat_warning"] = est.flat_warning;
  j["clamped"] = est.clamped;
  auto& recs = j["records"] = nlohmann::ordered_json::array();
  for (const auto& s : est.scales)
    recs.push_back({{"epsilon", s.epsilon}, {"count", s.count}, {"slope", est.slope}, {"ci", est.ci_half_width}});
  return j.dump(2);
}

}  // namespace repeller::geometry
