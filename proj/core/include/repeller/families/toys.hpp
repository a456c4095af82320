#pragma once

#include "repeller/families/model.hpp"
#include "repeller/holes/map_with_holes.hpp"

namespace repeller::families {

/// x -> 3x mod 1 with branches [0,1/3], [2/3,1] and hole (1/3,2/3). Its
/// repeller is the middle-third Cantor set.
class TriplingToy final : public holes::MapWithHoles, public SteppableModel {
 public:
  std::string name() const override { return "tripling"; }
  int dimension() const override { return 1; }
  int branch_count() const override { return 2; }
  bool in_hole(const TorusPoint& x) const override;
  int symbol(const TorusPoint& x) const override;
  TorusPoint forward(const TorusPoint& x) const override;
  TorusPoint step(const TorusPoint& x) const override { return forward(x); }
  TorusPoint inverse(int k, const TorusPoint& u) const override;
  bool inverse_is_affine(int) const override { return true; }
  holes::Jacobian jacobian(const TorusPoint& x) const override;
  double log_conorm(const TorusPoint&) const override;
  double expansion_floor(int) const override;
  double expansion_lipschitz(int) const override { return 0.0; }
  double branch_diameter(int) const override { return 1.0 / 3.0; }
  double branch_volume(int) const override { return 1.0 / 3.0; }
  double hole_volume() const override { return 1.0 / 3.0; }
  geometry::Region hole_region() const override;
  double inverse_norm_bound() const override { return 1.0 / 3.0; }
  double delta_parameter() const override { return 1.0 / 3.0; }

  geometry::Region trap_region() const override { return hole_region(); }
  bool has_trap() const override { return true; }
};

/// The conformal endomorphism A = [[3,-1],[1,3]] of T^2, no hole.
class LinearTorus2D final : public holes::MapWithHoles, public SteppableModel {
 public:
  std::string name() const override { return "linear2d"; }
  int dimension() const override { return 2; }
  int branch_count() const override { return 10; }
  bool in_hole(const TorusPoint&) const override { return false; }
  int symbol(const TorusPoint& x) const override;
  TorusPoint forward(const TorusPoint& x) const override;
  TorusPoint step(const TorusPoint& x) const override { return forward(x); }
  TorusPoint inverse(int k, const TorusPoint& u) const override;
  bool inverse_is_affine(int) const override { return true; }
  holes::Jacobian jacobian(const TorusPoint& x) const override;
  double log_conorm(const TorusPoint&) const override;
  double expansion_floor(int) const override;
  double expansion_lipschitz(int) const override { return 0.0; }
  double branch_diameter(int) const override;
  double branch_volume(int) const override { return 0.1; }
  double hole_volume() const override { return 0.0; }
  geometry::Region hole_region() const override;
  double inverse_norm_bound() const override;
  double delta_parameter() const override { return 0.0; }

  geometry::Region trap_region() const override { return hole_region(); }
  bool has_trap() const override { return false; }
};

/// Cell index of the centred lift under A = [[3,-1],[1,3]]: (3p + q) mod 10
/// where (p, q) = round(A x).
int linear_cell_symbol(const Eigen::Vector2d& centered_lift);

}  // namespace repeller::families
