#include "repeller/families/diaz_viana.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace repeller::families {

DiazVianaFamily::DiazVianaFamily(const DiazVianaParams& p)
    : params_(p), phi_(PhiProfile::build(p.t, p.sigma, p.delta0, p.delta1, p.sigma1)) {
  if (std::sqrt(p.delta0) * p.sigma >= 0.5) throw std::invalid_argument("diaz-viana: delta0 too large");
  rho_inv_ = phi_.invariant_radius();
  // Lipschitz constant of log f' = log(Phi + 2 w Phi') in x, sampled densely with a safety factor.
  const double xmax = std::sqrt(p.delta0);
  double best = 0.0;
  for (int i = 0; i <= 8192; ++i) {
    const double x = rho_inv_ + (xmax - rho_inv_) * i / 8192.0;
    const double w = x * x;
    const double d = phi_.value(w) + 2.0 * w * phi_.derivative(w);
    const double dd = 3.0 * phi_.derivative(w) + 2.0 * w * phi_.second_derivative(w);
    best = std::max(best, std::abs(dd * 2.0 * x / d));
  }
  lipschitz0_ = 1.5 * best;
}

bool DiazVianaFamily::in_hole(const TorusPoint& x) const {
  return rho_inv_ > 0.0 && std::abs(geometry::centered(x[0])) < rho_inv_;
}

int DiazVianaFamily::symbol(const TorusPoint& x) const {
  const double c = geometry::centered(x[0]);
  const auto r = static_cast<long long>(std::floor(2.0 * c + 0.5));
  return static_cast<int>(((r % 2) + 2) % 2);
}

TorusPoint DiazVianaFamily::forward(const TorusPoint& x) const {
  const double c = geometry::centered(x[0]);
  const double w = c * c;
  if (w < params_.delta0) return TorusPoint{phi_.value(w) * c};
  return TorusPoint{params_.sigma * c};
}

TorusPoint DiazVianaFamily::inverse(int k, const TorusPoint& u) const {
  const double c = geometry::centered(u[0]);
  if (k == 1) return TorusPoint{0.5 * (c + 1.0)};
  if (k != 0) throw std::out_of_range("diaz-viana: branch index out of range");
  const double r = std::abs(c);
  if (r < params_.sigma * std::sqrt(params_.delta0)) {
    const double rho = phi_.radial_inverse(r);
    return TorusPoint{c < 0 ? -rho : rho};
  }
  return TorusPoint{c / params_.sigma};
}

double DiazVianaFamily::derivative(const TorusPoint& x) const {
  const double c = geometry::centered(x[0]);
  const double w = c * c;
  if (w < params_.delta0) return phi_.value(w) + 2.0 * w * phi_.derivative(w);
  return params_.sigma;
}

holes::Jacobian DiazVianaFamily::jacobian(const TorusPoint& x) const {
  return holes::Jacobian::Constant(1, 1, derivative(x));
}

double DiazVianaFamily::log_conorm(const TorusPoint& x) const { return std::log(derivative(x)); }

double DiazVianaFamily::expansion_floor(int k) const {
  if (k != 0) return std::log(params_.sigma);
  // f' = Phi + 2 w Phi' increases on [w_inv, delta1] and exceeds Phi(delta1) beyond.
  const double w = rho_inv_ * rho_inv_;
  const double d_inv = phi_.value(w) + 2.0 * w * phi_.derivative(w);
  return std::log(std::min({d_inv, phi_.value(params_.delta1), params_.sigma}));
}

double DiazVianaFamily::expansion_lipschitz(int k) const { return k == 0 ? lipschitz0_ : 0.0; }

double DiazVianaFamily::branch_volume(int k) const { return k == 0 ? 0.5 - hole_volume() : 0.5; }

geometry::Region DiazVianaFamily::hole_region() const {
  if (rho_inv_ <= 0.0) return geometry::Region::empty(1, "hole");
  return geometry::Region::ball(TorusPoint{0.0}, rho_inv_, "hole");
}

geometry::Region DiazVianaFamily::trap_region() const { return hole_region(); }

double DiazVianaFamily::inverse_norm_bound() const { return 1.0 / std::min(1.0, 1.0 - params_.t); }

double DiazVianaFamily::K_t() const {
  if (hole_volume() <= 0.0) throw std::domain_error("K_t undefined without a hole");
  return params_.t / hole_volume();
}

}  // namespace repeller::families
