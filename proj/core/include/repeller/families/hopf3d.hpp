#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "repeller/families/model.hpp"
#include "repeller/families/phi_profile.hpp"

namespace repeller::families {

struct Hopf3DParams {
  double mu = 0.05;
  double delta0 = 0.01;
  double delta1 = 0.005;
  double sigma1 = 1.5;
  double trap_fraction = 0.5;
};

struct SpectralCertificate {
  double det = 0.0;
  double lambda = 0.0;
  double sigma = 0.0;
  double alpha = 0.0;
  double lambda_sigma2_error = 0.0;
  bool det_unimodular = false;
  bool sigma_above_3 = false;
  bool lambda_below_ninth = false;
  bool nonresonant = false;  // k alpha not in 2 pi Z for k = 1..4
  bool ok() const noexcept {
    return det_unimodular && sigma_above_3 && lambda_below_ninth && nonresonant && lambda_sigma2_error < 1e-10;
  }
};

/// Derived-from-Anosov map of T^3 from A = [[0,1,0],[0,0,1],[1,-10,0]]. In
/// eigencoordinates (u, v, z) the map inside V = {u^2+v^2 <= delta0, |z| <= delta0}
/// is (Phi3 R(alpha)(u, v), lambda z) with Phi3 ramped to sigma in |z|.
class HopfModel3D final : public SteppableModel {
 public:
  explicit HopfModel3D(const Hopf3DParams& p);

  static const Eigen::Matrix3d& matrix();
  static SpectralCertificate spectral_certificate();

  std::string name() const override { return "hopf3d"; }
  int dimension() const override { return 3; }
  TorusPoint step(const TorusPoint& x) const override;
  geometry::Region trap_region() const override;
  bool has_trap() const override { return rho_inv_ > 0.0; }

  /// Jacobian of the local form at eigencoordinates y (inside V).
  Eigen::Matrix3d local_jacobian(const Eigen::Vector3d& y) const;
  Eigen::Vector3d to_eigen(const TorusPoint& x) const;
  bool in_deformation(const Eigen::Vector3d& y) const;
  /// Phi blended to sigma for delta0/2 <= |z| <= delta0.
  double phi3(double w, double z) const;

  const Eigen::Matrix3d& basis() const noexcept { return P_; }
  const PhiProfile& phi() const noexcept { return phi_; }
  double rho_inv() const noexcept { return rho_inv_; }
  double lambda() const noexcept { return lambda_; }
  double sigma() const noexcept { return sigma_; }
  double alpha() const noexcept { return alpha_; }
  const Hopf3DParams& params() const noexcept { return params_; }

 private:
  Hopf3DParams params_;
  PhiProfile phi_;
  Eigen::Matrix3d P_, Pinv_;
  double lambda_ = 0, sigma_ = 0, alpha_ = 0;
  double rho_inv_ = 0;
};

}  // namespace repeller::families
