#include "repeller/families/hopf2d.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/LU>

namespace repeller::families {

namespace {

Eigen::Vector2d lift(const TorusPoint& x) {
  const auto c = x.centered_lift();
  return {c[0], c[1]};
}

TorusPoint wrap(const Eigen::Vector2d& v) { return TorusPoint{v.x(), v.y()}; }

const Eigen::Matrix2d& rotation() {
  static const Eigen::Matrix2d r = HopfModel2D::matrix() / HopfModel2D::sigma();
  return r;
}

}  // namespace

const Eigen::Matrix2d& HopfModel2D::matrix() {
  static const Eigen::Matrix2d a = (Eigen::Matrix2d() << 3, -1, 1, 3).finished();
  return a;
}

double HopfModel2D::sigma() { return std::sqrt(10.0); }
double HopfModel2D::alpha() { return std::atan2(1.0, 3.0); }

HopfModel2D::HopfModel2D(const Hopf2DParams& p)
    : params_(p), phi_(PhiProfile::build(p.mu, sigma(), p.delta0, p.delta1, p.sigma1)) {
  if (p.delta0 >= 0.02) throw std::invalid_argument("hopf2d: delta0 must keep the deformation disk inside cell 0");
  if (!(p.trap_fraction > 0.0 && p.trap_fraction <= 1.0))
    throw std::invalid_argument("hopf2d: trap_fraction must lie in (0, 1]");
  rho_inv_ = phi_.invariant_radius();
  hole_volume_ = std::numbers::pi * rho_inv_ * rho_inv_;
}

bool HopfModel2D::in_hole(const TorusPoint& x) const {
  if (rho_inv_ <= 0.0) return false;
  return lift(x).squaredNorm() < rho_inv_ * rho_inv_;
}

int linear_cell_symbol(const Eigen::Vector2d& c) {
  const Eigen::Vector2d a = HopfModel2D::matrix() * c;
  const auto p = static_cast<long long>(std::floor(a.x() + 0.5));
  const auto q = static_cast<long long>(std::floor(a.y() + 0.5));
  return static_cast<int>(((3 * p + q) % 10 + 10) % 10);
}

int HopfModel2D::symbol(const TorusPoint& x) const { return linear_cell_symbol(lift(x)); }

TorusPoint HopfModel2D::forward(const TorusPoint& x) const {
  const Eigen::Vector2d c = lift(x);
  const double w = c.squaredNorm();
  if (w < params_.delta0) return wrap(phi_.value(w) * (rotation() * c));
  return wrap(matrix() * c);
}

TorusPoint HopfModel2D::inverse(int k, const TorusPoint& u) const {
  if (k < 0 || k >= 10) throw std::out_of_range("hopf2d: branch index out of range");
  static const Eigen::Matrix2d ainv = matrix().inverse();
  const Eigen::Vector2d uc = lift(u);
  if (k == 0) {
    const double r = uc.norm();
    if (r * r < sigma() * sigma() * params_.delta0) {
      if (r == 0.0) return TorusPoint{0.0, 0.0};
      const double rho = phi_.radial_inverse(r);
      return wrap(rho / r * (rotation().transpose() * uc));
    }
    return wrap(ainv * uc);
  }
  return wrap(ainv * (uc + Eigen::Vector2d(0.0, static_cast<double>(k))));
}

holes::Jacobian HopfModel2D::jacobian(const TorusPoint& x) const {
  const Eigen::Vector2d c = lift(x);
  const double w = c.squaredNorm();
  if (w >= params_.delta0) return matrix();
  const Eigen::Matrix2d local = phi_.value(w) * Eigen::Matrix2d::Identity() + 2.0 * phi_.derivative(w) * c * c.transpose();
  return rotation() * local;
}

double HopfModel2D::log_conorm(const TorusPoint& x) const {
  const double w = lift(x).squaredNorm();
  if (w >= params_.delta0) return std::log(sigma());
  // Radial stretch Phi + 2 w Phi' dominates the tangential Phi since Phi' > 0.
  return std::log(phi_.value(w));
}

double HopfModel2D::log_jacobian(const TorusPoint& x) const {
  const double w = lift(x).squaredNorm();
  if (w >= params_.delta0) return std::log(10.0);
  const double v = phi_.value(w);
  return std::log(v) + std::log(v + 2.0 * w * phi_.derivative(w));
}

double HopfModel2D::expansion_floor(int k) const {
  if (k != 0) return std::log(sigma());
  // On R_0 the least expansion is Phi, minimal on the invariant circle (where
  // it equals 1) or, without a hole, at the origin.
  return params_.mu > 0.0 ? 0.0 : std::log(1.0 - params_.mu);
}

double HopfModel2D::expansion_lipschitz(int k) const {
  if (k != 0) return 0.0;
  return 2.0 * std::sqrt(params_.delta0) * phi_.max_derivative() / std::min(1.0, 1.0 - params_.mu);
}

double HopfModel2D::branch_diameter(int) const { return std::sqrt(2.0) / sigma(); }

double HopfModel2D::branch_volume(int k) const { return k == 0 ? 0.1 - hole_volume_ : 0.1; }

geometry::Region HopfModel2D::hole_region() const {
  if (rho_inv_ <= 0.0) return geometry::Region::empty(2, "hole");
  return geometry::Region::ball(TorusPoint{0.0, 0.0}, rho_inv_, "hole");
}

geometry::Region HopfModel2D::trap_region() const {
  if (rho_inv_ <= 0.0) return geometry::Region::empty(2, "trap");
  return geometry::Region::ball(TorusPoint{0.0, 0.0}, params_.trap_fraction * rho_inv_, "trap");
}

double HopfModel2D::inverse_norm_bound() const { return 1.0 / (1.0 - params_.mu); }

double HopfModel2D::rho_first_order() const {
  return params_.mu > 0.0 ? std::sqrt(params_.mu / phi_.b1()) : 0.0;
}

double HopfModel2D::K_mu() const {
  if (hole_volume_ <= 0.0) throw std::domain_error("K_mu undefined without a hole");
  return params_.mu / hole_volume_;
}

}  // namespace repeller::families
