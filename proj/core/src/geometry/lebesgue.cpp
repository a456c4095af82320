#include "repeller/geometry/lebesgue.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>
#include <boost/math/special_functions/beta.hpp>

#include "repeller/geometry/rng.hpp"

namespace repeller::geometry {

Interval binomial_interval(std::size_t hits, std::size_t n, double level) {
  if (n == 0) throw std::invalid_argument("binomial_interval: no samples");
  const double alpha = 1.0 - level;
  const double k = static_cast<double>(hits), N = static_cast<double>(n);
  if (hits <= 30) {
    Interval iv;
    iv.lo = hits == 0 ? 0.0 : boost::math::ibeta_inv(k, N - k + 1.0, alpha / 2.0);
    iv.hi = hits == n ? 1.0 : boost::math::ibeta_inv(k + 1.0, N - k, 1.0 - alpha / 2.0);
    return iv;
  }
  const double z = boost::math::quantile(boost::math::complement(boost::math::normal(), alpha / 2.0));
  const double p = k / N;
  const double h = z * std::sqrt(p * (1.0 - p) / N);
  return {std::max(0.0, p - h), std::min(1.0, p + h)};
}

MeasureEstimate lebesgue_estimate(const Region& region, std::size_t budget, std::uint64_t seed) {
  if (budget < 1000) throw std::invalid_argument("lebesgue_estimate: budget must be at least 1000");
  const int d = region.dim();
  Box box = region.bbox();
  for (int i = 0; i < d; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (box.hi[k] - box.lo[k] >= 1.0) {
      box.lo[k] = 0.0;
      box.hi[k] = 1.0;
    }
  }
  const double vol = box.volume();
  if (!(vol > 0.0)) throw std::invalid_argument("lebesgue_estimate: bounding box has zero volume");

  const auto g = static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(budget), 1.0 / d) + 1e-9));
  std::size_t strata = 1;
  for (int i = 0; i < d; ++i) strata *= g;
  const std::size_t per = budget / strata;
  Rng rng(seed, 0x1eb);
  MeasureEstimate m;
  m.samples = strata * per;
  for (std::size_t s = 0; s < strata; ++s) {
    std::array<std::size_t, kMaxDim> cell{};
    std::size_t r = s;
    for (int i = 0; i < d; ++i) {
      cell[static_cast<std::size_t>(i)] = r % g;
      r /= g;
    }
    for (std::size_t j = 0; j < per; ++j) {
      std::array<double, kMaxDim> x{};
      for (int i = 0; i < d; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const double u = (static_cast<double>(cell[k]) + rng.uniform()) / static_cast<double>(g);
        x[k] = box.lo[k] + u * (box.hi[k] - box.lo[k]);
      }
      if (region.contains(TorusPoint::wrapped(x, d))) ++m.hits;
    }
  }
  const double p = static_cast<double>(m.hits) / static_cast<double>(m.samples);
  const Interval iv = binomial_interval(m.hits, m.samples);
  m.value = p * vol;
  m.half_width = std::max(iv.hi - p, p - iv.lo) * vol;
  return m;
}

}  // namespace repeller::geometry
