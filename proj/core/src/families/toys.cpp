#include "repeller/families/toys.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/LU>

#include "repeller/families/hopf2d.hpp"

namespace repeller::families {

bool TriplingToy::in_hole(const TorusPoint& x) const { return x[0] > 1.0 / 3.0 && x[0] < 2.0 / 3.0; }

int TriplingToy::symbol(const TorusPoint& x) const { return x[0] <= 1.0 / 3.0 ? 0 : 1; }

TorusPoint TriplingToy::forward(const TorusPoint& x) const { return TorusPoint{3.0 * x[0]}; }

TorusPoint TriplingToy::inverse(int k, const TorusPoint& u) const {
  if (k == 0) return TorusPoint{u[0] / 3.0};
  if (k == 1) return TorusPoint{(2.0 + u[0]) / 3.0};
  throw std::out_of_range("tripling: branch index out of range");
}

holes::Jacobian TriplingToy::jacobian(const TorusPoint&) const { return holes::Jacobian::Constant(1, 1, 3.0); }

double TriplingToy::log_conorm(const TorusPoint&) const { return std::log(3.0); }

double TriplingToy::expansion_floor(int) const { return std::log(3.0); }

geometry::Region TriplingToy::hole_region() const {
  return geometry::Region("hole", [] {
    geometry::Box b;
    b.dim = 1;
    b.lo[0] = 1.0 / 3.0;
    b.hi[0] = 2.0 / 3.0;
    return b;
  }(), [](const TorusPoint& x) { return x[0] > 1.0 / 3.0 && x[0] < 2.0 / 3.0; }, 1.0 / 3.0);
}

namespace {
Eigen::Vector2d lift(const TorusPoint& x) {
  const auto c = x.centered_lift();
  return {c[0], c[1]};
}
}  // namespace

int LinearTorus2D::symbol(const TorusPoint& x) const { return linear_cell_symbol(lift(x)); }

TorusPoint LinearTorus2D::forward(const TorusPoint& x) const {
  const Eigen::Vector2d v = HopfModel2D::matrix() * lift(x);
  return TorusPoint{v.x(), v.y()};
}

TorusPoint LinearTorus2D::inverse(int k, const TorusPoint& u) const {
  if (k < 0 || k >= 10) throw std::out_of_range("linear2d: branch index out of range");
  static const Eigen::Matrix2d ainv = HopfModel2D::matrix().inverse();
  const Eigen::Vector2d v = ainv * (lift(u) + Eigen::Vector2d(0.0, static_cast<double>(k)));
  return TorusPoint{v.x(), v.y()};
}

holes::Jacobian LinearTorus2D::jacobian(const TorusPoint&) const { return HopfModel2D::matrix(); }

double LinearTorus2D::log_conorm(const TorusPoint&) const { return 0.5 * std::log(10.0); }

double LinearTorus2D::expansion_floor(int) const { return 0.5 * std::log(10.0); }

double LinearTorus2D::branch_diameter(int) const { return std::sqrt(2.0 / 10.0); }

geometry::Region LinearTorus2D::hole_region() const { return geometry::Region::empty(2, "hole"); }

double LinearTorus2D::inverse_norm_bound() const { return 1.0 / std::sqrt(10.0); }

}  // namespace repeller::families
