#include "repeller/families/phi_profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/tools/roots.hpp>

namespace repeller::families {

namespace {
std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}
}  // namespace

PhiProfile PhiProfile::build(double mu, double sigma, double delta0, double delta1, double sigma1) {
  if (!(std::abs(mu) < 1.0)) throw PhiConditionError("C1", "|mu| must be < 1, got " + fmt(mu));
  if (!(delta1 > 0.0 && delta1 < delta0)) throw PhiConditionError("C4", "need 0 < delta1 < delta0");
  if (!(sigma1 > 1.0 && sigma1 < sigma)) throw PhiConditionError("C4", "need 1 < sigma1 < sigma");

  PhiProfile p;
  p.mu_ = mu;
  p.sigma_ = sigma;
  p.delta0_ = delta0;
  p.delta1_ = delta1;
  p.sigma1_ = sigma1;
  // Quadratic rises by G on [0, delta1], landing midway between sigma1 and sigma
  // (for mu = 0); b and q share the rise equally.
  const double G = 0.5 * (sigma1 + sigma) - 1.0;
  p.b_ = G / (2.0 * delta1);
  p.q_ = G / (2.0 * delta1 * delta1);
  p.y0_ = 1.0 - mu + G;
  p.m0_ = p.b_ + 2.0 * p.q_ * delta1;

  const double rise = sigma - p.y0_;
  if (!(rise > 0.0))
    throw PhiConditionError("C2", "Phi(delta1) = " + fmt(p.y0_) + " already exceeds sigma = " + fmt(sigma));
  if (!(p.y0_ > sigma1))
    throw PhiConditionError("C4", "Phi(delta1) = " + fmt(p.y0_) + " does not exceed sigma1 = " + fmt(sigma1));
  const double secant = rise / (delta0 - delta1);
  const double ratio = p.m0_ / secant;
  if (!(ratio < 3.0))
    throw PhiConditionError("C3", "cubic blend on [delta1, delta0] not monotone (slope ratio " + fmt(ratio) +
                                      " >= 3)");

  double maxd = p.m0_;
  for (int i = 0; i <= 4096; ++i) {
    const double w = delta1 + (delta0 - delta1) * i / 4096.0;
    maxd = std::max(maxd, p.derivative(w));
  }
  p.c0_ = delta0 * maxd;

  const PhiConditions c = p.verify();
  if (!c.all()) throw PhiConditionError(c.first_failure, "grid check failed, violation " + fmt(c.worst_violation));
  return p;
}

double PhiProfile::value(double w) const noexcept {
  if (w <= delta1_) {
    const double v = std::max(w, 0.0);
    return 1.0 - mu_ + v * (b_ + q_ * v);
  }
  if (w >= delta0_) return sigma_;
  const double h = delta0_ - delta1_;
  const double s = (w - delta1_) / h;
  const double s2 = s * s, s3 = s2 * s;
  const double h00 = 2 * s3 - 3 * s2 + 1;
  const double h10 = s3 - 2 * s2 + s;
  const double h01 = -2 * s3 + 3 * s2;
  return y0_ * h00 + h * m0_ * h10 + sigma_ * h01;
}

double PhiProfile::derivative(double w) const noexcept {
  if (w <= delta1_) return b_ + 2.0 * q_ * std::max(w, 0.0);
  if (w >= delta0_) return 0.0;
  const double h = delta0_ - delta1_;
  const double s = (w - delta1_) / h;
  const double s2 = s * s;
  const double d00 = 6 * s2 - 6 * s;
  const double d10 = 3 * s2 - 4 * s + 1;
  const double d01 = -6 * s2 + 6 * s;
  return (y0_ * d00 + sigma_ * d01) / h + m0_ * d10;
}

double PhiProfile::second_derivative(double w) const noexcept {
  if (w <= delta1_) return 2.0 * q_;
  if (w >= delta0_) return 0.0;
  const double h = delta0_ - delta1_;
  const double s = (w - delta1_) / h;
  const double e00 = 12 * s - 6;
  const double e10 = 6 * s - 4;
  const double e01 = -12 * s + 6;
  return (y0_ * e00 + sigma_ * e01) / (h * h) + m0_ * e10 / h;
}

double PhiProfile::radial_derivative(double rho) const noexcept {
  const double w = rho * rho;
  return value(w) + 2.0 * w * derivative(w);
}

double PhiProfile::radial_inverse(double r) const {
  const double rmax = std::sqrt(delta0_);
  if (r <= 0.0) return 0.0;
  if (r >= radial(rmax)) return r / sigma_;
  auto f = [&](double rho) { return radial(rho) - r; };
  boost::math::tools::eps_tolerance<double> tol(std::numeric_limits<double>::digits - 3);
  auto [lo, hi] = boost::math::tools::bisect(f, 0.0, rmax, tol);
  double rho = 0.5 * (lo + hi);
  for (int i = 0; i < 2; ++i) {
    const double d = radial_derivative(rho);
    if (d > 0.0) rho -= f(rho) / d;
  }
  return std::clamp(rho, lo, hi);
}

double PhiProfile::invariant_radius() const {
  if (mu_ <= 0.0) return 0.0;
  auto f = [&](double rho) { return value(rho * rho) - 1.0; };
  const double rmax = std::sqrt(delta0_);
  if (!(f(0.0) < 0.0 && f(rmax) > 0.0))
    throw std::runtime_error("invariant_radius: root not bracketed in (0, sqrt(delta0))");
  auto tol = [](double a, double b) { return std::abs(b - a) <= 1e-12; };
  auto [lo, hi] = boost::math::tools::bisect(f, 0.0, rmax, tol);
  return 0.5 * (lo + hi);
}

PhiConditions PhiProfile::verify(std::size_t points) const {
  PhiConditions c;
  c.c1 = c.c2 = c.c3 = c.c4 = true;
  c.points = points;
  auto fail = [&](bool& flag, const char* name, double amount) {
    if (flag && c.first_failure.empty()) c.first_failure = name;
    flag = false;
    c.worst_violation = std::max(c.worst_violation, amount);
  };
  const double rel = 1e-12;
  if (std::abs(value(0.0) - (1.0 - mu_)) > rel) fail(c.c1, "C1", std::abs(value(0.0) - (1.0 - mu_)));
  const double d0 = derivative(0.0);
  const double bound = c0_ / delta0_;
  // Grid over [0, 2 delta0] so that the constant tail is checked as well.
  for (std::size_t i = 0; i < points; ++i) {
    const double w = 2.0 * delta0_ * static_cast<double>(i) / static_cast<double>(points - 1);
    const double v = value(w), d = derivative(w);
    if (v < 1.0 - mu_ - rel) fail(c.c1, "C1", 1.0 - mu_ - v);
    if (w >= delta0_ && std::abs(v - sigma_) > rel) fail(c.c2, "C2", std::abs(v - sigma_));
    if (w < delta0_ && !(d > 0.0 && d <= bound * (1.0 + rel))) fail(c.c3, "C3", d <= 0.0 ? -d : d - bound);
    if (w >= delta1_ && !(v > sigma1_)) fail(c.c4, "C4", sigma1_ - v);
    if (w <= delta1_ && d < d0 - rel * d0) fail(c.c4, "C4", d0 - d);
  }
  return c;
}

}  // namespace repeller::families
