#include "repeller/families/hopf3d.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace repeller::families {

namespace {

struct EigenData {
  Eigen::Matrix3d P;
  double lambda, sigma, alpha;
};

EigenData eigen_data() {
  const Eigen::Matrix3d& A = HopfModel3D::matrix();
  Eigen::EigenSolver<Eigen::Matrix3d> es(A);
  const auto vals = es.eigenvalues();
  const auto vecs = es.eigenvectors();
  int real_i = -1, cplx_i = -1;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(vals[i].imag()) < 1e-12)
      real_i = i;
    else if (vals[i].imag() > 0.0)
      cplx_i = i;
  }
  if (real_i < 0 || cplx_i < 0) throw std::logic_error("hopf3d: expected one real and a complex pair");

  EigenData d{};
  d.lambda = vals[real_i].real();
  d.sigma = std::abs(vals[cplx_i]);
  d.alpha = std::arg(vals[cplx_i]);

  // Fix the phase so that Re v and Im v are orthogonal, then scale Re v to unit length.
  Eigen::Vector3cd v = vecs.col(cplx_i);
  const Eigen::Vector3d a0 = v.real(), b0 = v.imag();
  const double theta = 0.5 * std::atan2(2.0 * a0.dot(b0), a0.squaredNorm() - b0.squaredNorm());
  v *= std::polar(1.0, -theta);
  Eigen::Vector3d a = v.real(), b = v.imag();
  const double s = a.norm();
  a /= s;
  b /= s;
  Eigen::Vector3d e = vecs.col(real_i).real().normalized();
  for (int i = 0; i < 3; ++i)
    if (std::abs(e[i]) > 1e-12) {
      if (e[i] < 0) e = -e;
      break;
    }
  d.P.col(0) = a;
  d.P.col(1) = -b;
  d.P.col(2) = e;
  return d;
}

double smoothstep(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * (3.0 - 2.0 * t);
}

}  // namespace

const Eigen::Matrix3d& HopfModel3D::matrix() {
  static const Eigen::Matrix3d a = (Eigen::Matrix3d() << 0, 1, 0, 0, 0, 1, 1, -10, 0).finished();
  return a;
}

SpectralCertificate HopfModel3D::spectral_certificate() {
  const EigenData d = eigen_data();
  SpectralCertificate c;
  c.det = matrix().determinant();
  c.lambda = d.lambda;
  c.sigma = d.sigma;
  c.alpha = d.alpha;
  c.lambda_sigma2_error = std::abs(d.lambda * d.sigma * d.sigma - 1.0);
  c.det_unimodular = std::abs(std::abs(c.det) - 1.0) < 1e-12;
  c.sigma_above_3 = d.sigma > 3.0;
  c.lambda_below_ninth = d.lambda > 0.0 && d.lambda < 1.0 / 9.0;
  c.nonresonant = true;
  for (int k = 1; k <= 4; ++k)
    if (std::abs(std::sin(0.5 * k * d.alpha)) < 1e-6) c.nonresonant = false;
  return c;
}

HopfModel3D::HopfModel3D(const Hopf3DParams& p) : params_(p), phi_([&] {
  const EigenData d = eigen_data();
  return PhiProfile::build(p.mu, d.sigma, p.delta0, p.delta1, p.sigma1);
}()) {
  const SpectralCertificate cert = spectral_certificate();
  if (!cert.ok()) throw std::logic_error("hopf3d: spectral certificate failed");
  if (!(p.trap_fraction > 0.0 && p.trap_fraction <= 1.0))
    throw std::invalid_argument("hopf3d: trap_fraction must lie in (0, 1]");
  const EigenData d = eigen_data();
  P_ = d.P;
  Pinv_ = P_.inverse();
  lambda_ = d.lambda;
  sigma_ = d.sigma;
  alpha_ = d.alpha;
  // V must sit well inside the centred unit cell.
  const double reach = P_.cwiseAbs().rowwise().sum().maxCoeff() * (std::sqrt(p.delta0) + p.delta0);
  if (reach >= 0.5) throw std::invalid_argument("hopf3d: delta0 too large for the unit cell");
  rho_inv_ = phi_.invariant_radius();
}

Eigen::Vector3d HopfModel3D::to_eigen(const TorusPoint& x) const {
  const auto c = x.centered_lift();
  return Pinv_ * Eigen::Vector3d(c[0], c[1], c[2]);
}

bool HopfModel3D::in_deformation(const Eigen::Vector3d& y) const {
  return y[0] * y[0] + y[1] * y[1] < params_.delta0 && std::abs(y[2]) < params_.delta0;
}

double HopfModel3D::phi3(double w, double z) const {
  const double half = 0.5 * params_.delta0;
  const double s = smoothstep((std::abs(z) - half) / half);
  const double v = phi_.value(w);
  return v + (sigma_ - v) * s;
}

TorusPoint HopfModel3D::step(const TorusPoint& x) const {
  const auto c = x.centered_lift();
  const Eigen::Vector3d xc(c[0], c[1], c[2]);
  const Eigen::Vector3d y = Pinv_ * xc;
  Eigen::Vector3d out;
  if (in_deformation(y)) {
    const double w = y[0] * y[0] + y[1] * y[1];
    const double f = phi3(w, y[2]);
    const double ca = std::cos(alpha_), sa = std::sin(alpha_);
    const Eigen::Vector3d yn(f * (ca * y[0] - sa * y[1]), f * (sa * y[0] + ca * y[1]), lambda_ * y[2]);
    out = P_ * yn;
  } else {
    out = matrix() * xc;
  }
  return TorusPoint{out[0], out[1], out[2]};
}

Eigen::Matrix3d HopfModel3D::local_jacobian(const Eigen::Vector3d& y) const {
  const double w = y[0] * y[0] + y[1] * y[1];
  const double half = 0.5 * params_.delta0;
  const double t = (std::abs(y[2]) - half) / half;
  const double s = smoothstep(t);
  const double ds = (t > 0.0 && t < 1.0) ? 6.0 * t * (1.0 - t) / half * (y[2] < 0 ? -1.0 : 1.0) : 0.0;
  const double v = phi_.value(w), dv = phi_.derivative(w);
  const double f = v + (sigma_ - v) * s;
  const double fw = dv * (1.0 - s);
  const double fz = (sigma_ - v) * ds;
  Eigen::Matrix2d rot;
  rot << std::cos(alpha_), -std::sin(alpha_), std::sin(alpha_), std::cos(alpha_);
  const Eigen::Vector2d uv(y[0], y[1]);
  Eigen::Matrix3d j = Eigen::Matrix3d::Zero();
  j.topLeftCorner<2, 2>() = rot * (f * Eigen::Matrix2d::Identity() + 2.0 * fw * uv * uv.transpose());
  j.block<2, 1>(0, 2) = rot * uv * fz;
  j(2, 2) = lambda_;
  return j;
}

geometry::Region HopfModel3D::trap_region() const {
  const double r = params_.trap_fraction * rho_inv_;
  const double zmax = 0.5 * params_.delta0;
  if (r <= 0.0) return geometry::Region::empty(3, "trap");
  geometry::Box box;
  box.dim = 3;
  const double reach = P_.cwiseAbs().rowwise().sum().maxCoeff() * (r + zmax);
  for (int i = 0; i < 3; ++i) {
    box.lo[static_cast<std::size_t>(i)] = -reach;
    box.hi[static_cast<std::size_t>(i)] = reach;
  }
  const Eigen::Matrix3d pinv = Pinv_;
  return geometry::Region("trap", box, [pinv, r, zmax](const TorusPoint& x) {
    const auto c = x.centered_lift();
    const Eigen::Vector3d y = pinv * Eigen::Vector3d(c[0], c[1], c[2]);
    return y[0] * y[0] + y[1] * y[1] <= r * r && std::abs(y[2]) <= zmax;
  });
}

}  // namespace repeller::families
