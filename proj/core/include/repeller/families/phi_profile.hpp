#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace repeller::families {

/// Raised when the requested parameters cannot satisfy (C1)-(C4).
class PhiConditionError : public std::invalid_argument {
 public:
  PhiConditionError(std::string condition, const std::string& detail)
      : std::invalid_argument(condition + ": " + detail), condition_(std::move(condition)) {}
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

struct PhiConditions {
  bool c1 = false, c2 = false, c3 = false, c4 = false;
  std::size_t points = 0;
  /// Largest pointwise violation seen (0 when all hold).
  double worst_violation = 0.0;
  std::string first_failure;
  bool all() const noexcept { return c1 && c2 && c3 && c4; }
};

/// Radial profile Phi(mu, w), w = rho^2:
///   [0, d1]   1 - mu + b w + q w^2  (b, q > 0)
///   [d1, d0]  monotone cubic Hermite blend to sigma with zero end slope
///   [d0, inf) sigma
class PhiProfile {
 public:
  /// Throws PhiConditionError naming the violated condition.
  static PhiProfile build(double mu, double sigma, double delta0, double delta1, double sigma1);

  double operator()(double w) const noexcept { return value(w); }
  double value(double w) const noexcept;
  double derivative(double w) const noexcept;
  double second_derivative(double w) const noexcept;

  /// r(rho) = Phi(rho^2) rho and its derivative Phi + 2 w Phi'.
  double radial(double rho) const noexcept { return value(rho * rho) * rho; }
  double radial_derivative(double rho) const noexcept;
  /// Inverse of r on [0, sqrt(delta0)]; bisection polished by Newton.
  double radial_inverse(double r) const;

  /// Root of Phi(w) = 1 as a radius (0 when mu <= 0), bisection to 1e-12.
  double invariant_radius() const;

  PhiConditions verify(std::size_t points = 2048) const;

  double mu() const noexcept { return mu_; }
  double sigma() const noexcept { return sigma_; }
  double sigma1() const noexcept { return sigma1_; }
  double delta0() const noexcept { return delta0_; }
  double delta1() const noexcept { return delta1_; }
  /// b1(mu) = dPhi/dw at w = 0.
  double b1() const noexcept { return b_; }
  double q() const noexcept { return q_; }
  /// delta0 * max dPhi/dw.
  double c0() const noexcept { return c0_; }
  double max_derivative() const noexcept { return c0_ / delta0_; }

 private:
  PhiProfile() = default;

  double mu_ = 0, sigma_ = 0, sigma1_ = 0, delta0_ = 0, delta1_ = 0;
  double b_ = 0, q_ = 0;
  double y0_ = 0, m0_ = 0;  // value and slope at delta1
  double c0_ = 0;
};

}  // namespace repeller::families
