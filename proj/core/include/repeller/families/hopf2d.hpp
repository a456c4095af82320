#pragma once

#include <Eigen/Core>

#include "repeller/families/model.hpp"
#include "repeller/families/phi_profile.hpp"
#include "repeller/holes/map_with_holes.hpp"

namespace repeller::families {

struct Hopf2DParams {
  double mu = 0.05;
  double delta0 = 0.005;
  double delta1 = 0.0025;
  double sigma1 = 1.5;
  double trap_fraction = 0.5;
};

/// Degree-10 endomorphism of T^2 given by A = [[3,-1],[1,3]] outside the
/// disk rho^2 < delta0 around the origin and by (Phi(rho^2) rho, theta + alpha)
/// inside. For mu > 0 the open disk bounded by the invariant circle is the hole.
class HopfModel2D final : public holes::MapWithHoles, public SteppableModel {
 public:
  explicit HopfModel2D(const Hopf2DParams& p);

  static const Eigen::Matrix2d& matrix();
  static double sigma();
  static double alpha();

  std::string name() const override { return "hopf2d"; }
  int dimension() const override { return 2; }
  int branch_count() const override { return 10; }
  bool in_hole(const TorusPoint& x) const override;
  int symbol(const TorusPoint& x) const override;
  TorusPoint forward(const TorusPoint& x) const override;
  TorusPoint step(const TorusPoint& x) const override { return forward(x); }
  TorusPoint inverse(int k, const TorusPoint& u) const override;
  bool inverse_is_affine(int k) const override { return k != 0; }
  holes::Jacobian jacobian(const TorusPoint& x) const override;
  double log_conorm(const TorusPoint& x) const override;
  double expansion_floor(int k) const override;
  double expansion_lipschitz(int k) const override;
  double branch_diameter(int k) const override;
  double branch_volume(int k) const override;
  double hole_volume() const override { return hole_volume_; }
  geometry::Region hole_region() const override;
  double inverse_norm_bound() const override;
  int intersection_bound() const override { return 10; }
  double delta_parameter() const override { return params_.mu; }
  std::optional<int> degenerate_branch() const override { return 0; }

  geometry::Region trap_region() const override;
  bool has_trap() const override { return rho_inv_ > 0.0; }

  /// log |det Df(x)|.
  double log_jacobian(const TorusPoint& x) const;

  const Hopf2DParams& params() const noexcept { return params_; }
  const PhiProfile& phi() const noexcept { return phi_; }
  double rho_inv() const noexcept { return rho_inv_; }
  /// sqrt(mu / b1), the leading-order invariant-circle radius.
  double rho_first_order() const;
  /// K = b1 / pi, the infimum over mu > 0 of K_mu = mu / mu_f.
  double K() const noexcept { return phi_.b1() / 3.141592653589793238462643383279502884; }
  double K_mu() const;
  double c0() const noexcept { return K() / 256.0; }

 private:
  Hopf2DParams params_;
  PhiProfile phi_;
  double rho_inv_ = 0.0;
  double hole_volume_ = 0.0;
};

}  // namespace repeller::families
