#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "repeller/geometry/region.hpp"
#include "repeller/geometry/torus.hpp"

namespace repeller::holes {

using geometry::TorusPoint;
using Jacobian = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, 0, 3, 3>;

/// Piecewise expanding map on T^d with branch domains R_0..R_m and a hole.
///
/// Branch k is the fundamental cell with symbol k minus the hole. The forward
/// map is total; `inverse(k, u)` is the inverse branch onto cell k. All
/// evaluators must be pure so they can be called concurrently.
class MapWithHoles {
 public:
  virtual ~MapWithHoles() = default;

  virtual std::string name() const = 0;
  virtual int dimension() const = 0;
  /// m + 1.
  virtual int branch_count() const = 0;

  virtual bool in_hole(const TorusPoint& x) const = 0;
  /// Fundamental-cell index of x, ignoring the hole.
  virtual int symbol(const TorusPoint& x) const = 0;
  std::optional<int> branch_of(const TorusPoint& x) const {
    if (in_hole(x)) return std::nullopt;
    return symbol(x);
  }

  virtual TorusPoint forward(const TorusPoint& x) const = 0;
  virtual TorusPoint inverse(int k, const TorusPoint& u) const = 0;
  virtual bool inverse_is_affine(int k) const = 0;

  virtual Jacobian jacobian(const TorusPoint& x) const = 0;
  /// log of the least expansion ||Df(x)^-1||^-1.
  virtual double log_conorm(const TorusPoint& x) const;
  double inverse_derivative_norm(const TorusPoint& x) const;

  /// Certified lower bound of log_conorm over R_k.
  virtual double expansion_floor(int k) const = 0;
  /// Lipschitz constant of log_conorm on R_k.
  virtual double expansion_lipschitz(int k) const = 0;
  virtual double branch_diameter(int k) const = 0;
  virtual double branch_volume(int k) const = 0;

  /// mu_f = Leb(H_f).
  virtual double hole_volume() const = 0;
  virtual geometry::Region hole_region() const = 0;
  /// True when the closed lifted box lies inside the hole. The default tests
  /// every corner, which is exact for convex holes.
  virtual bool box_inside_hole(const geometry::Box& b) const;

  /// S >= sup ||Df^-1||.
  virtual double inverse_norm_bound() const = 0;
  /// eta: bound on the number of branch domains met by one branch image.
  virtual int intersection_bound() const { return branch_count(); }
  /// J(i): branches whose domains lie in the image of branch i.
  virtual std::vector<int> successors(int k) const;

  /// Parameter at which delta(n, .) is evaluated.
  virtual double delta_parameter() const = 0;
  /// Index of the branch containing the non-hyperbolic region, if any.
  virtual std::optional<int> degenerate_branch() const { return std::nullopt; }
};

}  // namespace repeller::holes
