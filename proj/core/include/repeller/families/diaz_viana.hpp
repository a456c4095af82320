#pragma once

#include "repeller/families/model.hpp"
#include "repeller/families/phi_profile.hpp"
#include "repeller/holes/map_with_holes.hpp"

namespace repeller::families {

struct DiazVianaParams {
  double t = 0.01;
  double sigma = 2.0;
  double delta0 = 0.01;
  double delta1 = 0.005;
  double sigma1 = 1.2;
};

/// Degree-2 circle covering x -> 2x, locally x -> Phi(t, x^2) x near 0. For
/// t > 0 the repelling pair +-rho_inv bounds the hole and the derivative is
/// strictly above 1 everywhere outside it.
class DiazVianaFamily final : public holes::MapWithHoles, public SteppableModel {
 public:
  explicit DiazVianaFamily(const DiazVianaParams& p);

  std::string name() const override { return "diaz-viana"; }
  int dimension() const override { return 1; }
  int branch_count() const override { return 2; }
  bool in_hole(const TorusPoint& x) const override;
  int symbol(const TorusPoint& x) const override;
  TorusPoint forward(const TorusPoint& x) const override;
  TorusPoint step(const TorusPoint& x) const override { return forward(x); }
  TorusPoint inverse(int k, const TorusPoint& u) const override;
  bool inverse_is_affine(int k) const override { return k != 0; }
  holes::Jacobian jacobian(const TorusPoint& x) const override;
  double log_conorm(const TorusPoint& x) const override;
  double derivative(const TorusPoint& x) const;
  double expansion_floor(int k) const override;
  double expansion_lipschitz(int k) const override;
  double branch_diameter(int) const override { return 0.5; }
  double branch_volume(int k) const override;
  double hole_volume() const override { return 2.0 * rho_inv_; }
  geometry::Region hole_region() const override;
  double inverse_norm_bound() const override;
  double delta_parameter() const override { return params_.t; }
  std::optional<int> degenerate_branch() const override { return 0; }

  geometry::Region trap_region() const override;
  bool has_trap() const override { return rho_inv_ > 0.0; }

  const PhiProfile& phi() const noexcept { return phi_; }
  double rho_inv() const noexcept { return rho_inv_; }
  /// t / mu_f.
  double K_t() const;

 private:
  DiazVianaParams params_;
  PhiProfile phi_;
  double rho_inv_ = 0.0;
  double lipschitz0_ = 0.0;
};

}  // namespace repeller::families
