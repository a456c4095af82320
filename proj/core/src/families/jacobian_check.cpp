#include "repeller/families/jacobian_check.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "repeller/geometry/rng.hpp"

namespace repeller::families {

namespace {

void consider(JacobianBound& b, double value, const TorusPoint& x) {
  ++b.samples;
  if (value < b.measured_min) {
    b.measured_min = value;
    b.argmin = x;
  }
}

}  // namespace

JacobianReport jacobian_bounds_check(const HopfModel2D& model, std::size_t samples, std::uint64_t seed) {
  JacobianReport r;
  r.mu = model.params().mu;
  const double d1 = model.params().delta1;
  r.outside_v1.bound = 2.0 * std::log(model.params().sigma1);
  r.outside_hole.bound = 61.0 / 32.0 * r.mu;
  r.outside_v1.measured_min = r.outside_hole.measured_min = std::numeric_limits<double>::infinity();
  r.at_fixed_point = model.log_jacobian(TorusPoint{0.0, 0.0});

  auto visit = [&](const TorusPoint& x) {
    const double lj = model.log_jacobian(x);
    const auto c = x.centered_lift();
    const double w = c[0] * c[0] + c[1] * c[1];
    if (w > d1) consider(r.outside_v1, lj, x);
    if (!model.in_hole(x)) consider(r.outside_hole, lj, x);
  };

  geometry::Rng rng(seed, 0x1ac);
  const std::size_t uniform = samples / 2;
  for (std::size_t i = 0; i < uniform; ++i) visit(TorusPoint{rng.uniform(), rng.uniform()});
  // The remaining half concentrates on the deformation disk, where the minima live.
  const double rmax = std::sqrt(model.params().delta0);
  const double rho = model.rho_inv();
  for (std::size_t i = uniform; i < samples; ++i) {
    const double th = 2.0 * std::numbers::pi * rng.uniform();
    double rad = 0.0;
    switch (i % 3) {
      case 0: rad = rmax * std::sqrt(rng.uniform()); break;
      case 1: rad = rho * (1.0 + 1e-9 * rng.uniform()); break;
      default: rad = std::sqrt(d1) * (1.0 + 1e-9 * rng.uniform()); break;
    }
    visit(TorusPoint{rad * std::cos(th), rad * std::sin(th)});
  }
  r.outside_v1.pass = r.outside_v1.measured_min >= r.outside_v1.bound;
  r.outside_hole.pass = r.outside_hole.measured_min >= r.outside_hole.bound;
  return r;
}

}  // namespace repeller::families
