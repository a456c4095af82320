#pragma once

#include <cstddef>
#include <cstdint>

#include "repeller/families/hopf2d.hpp"

namespace repeller::families {

struct JacobianBound {
  double bound = 0.0;
  double measured_min = 0.0;
  TorusPoint argmin;
  std::size_t samples = 0;
  bool pass = false;
};

struct JacobianReport {
  double mu = 0.0;
  /// log Jac >= 2 log sigma1 outside V1 = {rho^2 <= delta1}.
  JacobianBound outside_v1;
  /// log Jac >= (61/32) mu outside the hole.
  JacobianBound outside_hole;
  /// log Jac at the fixed point, 2 log(1 - mu).
  double at_fixed_point = 0.0;
  bool pass() const noexcept { return outside_v1.pass && outside_hole.pass; }
};

/// Uniform samples plus a dense ring on the invariant circle and the V1 boundary.
JacobianReport jacobian_bounds_check(const HopfModel2D& model, std::size_t samples, std::uint64_t seed);

}  // namespace repeller::families
