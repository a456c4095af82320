#include "repeller/bounds/inequalities.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <stdexcept>

#include <mpfr.h>

#include "repeller/bounds/big_binomial.hpp"

namespace repeller::bounds {

namespace {

constexpr mpfr_prec_t kPrec = 256;

struct Mpfr {
  mpfr_t v;
  Mpfr() { mpfr_init2(v, kPrec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  double d() const { return mpfr_get_d(v, MPFR_RNDN); }
};

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

mpz_class ipow(unsigned long b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

/// Lower bound (rounded towards -inf) of l (1 + tau) kappa log(1/kappa).
void entropy_rhs(Mpfr& out, int l, double kappa, double tau) {
  Mpfr lk;
  mpfr_set_d(lk.v, kappa, MPFR_RNDN);  // exact: kappa is a double
  mpfr_log(lk.v, lk.v, MPFR_RNDU);
  mpfr_neg(lk.v, lk.v, MPFR_RNDD);  // log(1/kappa), rounded down
  mpfr_set_d(out.v, 1.0, MPFR_RNDN);
  mpfr_add_d(out.v, out.v, tau, MPFR_RNDD);
  mpfr_mul_d(out.v, out.v, kappa, MPFR_RNDD);
  mpfr_mul_si(out.v, out.v, l, MPFR_RNDD);
  mpfr_mul(out.v, out.v, lk.v, MPFR_RNDD);
}

/// C <= exp(x) with exp rounded down.
bool le_exp_mpfr(const mpz_class& c, const Mpfr& x) {
  Mpfr e;
  mpfr_exp(e.v, x.v, MPFR_RNDD);
  return mpfr_cmp_z(e.v, c.get_mpz_t()) >= 0;
}

}  // namespace

StirlingCheck stirling_binomial_bound(int l, int t) {
  if (!(t >= 1 && 2 * t < l)) throw std::invalid_argument("stirling_binomial_bound: need 1 <= t < l/2");
  const auto L = static_cast<unsigned long>(l), T = static_cast<unsigned long>(t);
  StirlingCheck s;
  s.l = l;
  s.t = t;
  const mpz_class c = binomial(L, T);
  s.pass = c * ipow(T, T) * ipow(L - T, L - T) <= ipow(L, L);
  s.log_exact = log_of(c);
  s.log_bound = xlogx(l) - xlogx(t) - xlogx(l - t);
  s.prefactor_pass = prefactor_inequality(l, t);
  return s;
}

StirlingSweep stirling_sweep(int l) {
  StirlingSweep sw;
  sw.l = l;
  const auto L = static_cast<unsigned long>(l);
  const mpz_class ll = ipow(L, L);
  mpz_class c = L;  // C(l, 1)
  double worst_margin = std::numeric_limits<double>::infinity();
  for (int t = 1; 2 * t < l; ++t) {
    const auto T = static_cast<unsigned long>(t);
    if (t > 1) {
      c *= L - T + 1;
      c /= T;
    }
    StirlingCheck s;
    s.l = l;
    s.t = t;
    s.pass = c * ipow(T, T) * ipow(L - T, L - T) <= ll;
    s.log_exact = log_of(c);
    s.log_bound = xlogx(l) - xlogx(t) - xlogx(l - t);
    s.prefactor_pass = prefactor_inequality(l, t);
    ++sw.cells;
    if (!s.pass) ++sw.failures;
    if (!s.prefactor_pass) ++sw.prefactor_failures;
    const double margin = s.log_bound - s.log_exact;
    if (margin < worst_margin) {
      worst_margin = margin;
      sw.worst = s;
    }
  }
  return sw;
}

bool prefactor_inequality(int l, int t) {
  // (1 + 1/(4l))^2 <= t pi  <=>  (4l+1)^2 <= 16 l^2 t pi; pi > 333/106 makes
  // (4l+1)^2 * 106 <= 16 l^2 t * 333 sufficient.
  const mpz_class L = l, T = t;
  const mpz_class lhs = (4 * L + 1) * (4 * L + 1) * 106;
  const mpz_class rhs = 16 * L * L * T * 333;
  return lhs <= rhs;
}

double kappa0(double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("kappa0: tau must be positive");
  return std::exp(-1.0 / tau);
}

EntropyCheck entropy_bound_unchecked(int l, int t, double kappa, double tau) {
  if (l < 1 || t < 0 || t > l) throw std::invalid_argument("entropy_bound: need 0 <= t <= l, l >= 1");
  if (!(kappa > 0.0 && kappa < 1.0)) throw std::invalid_argument("entropy_bound: kappa must lie in (0,1)");
  EntropyCheck e;
  e.l = l;
  e.t = t;
  e.kappa = kappa;
  e.tau = tau;
  const mpz_class c = binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(t));
  Mpfr rhs;
  entropy_rhs(rhs, l, kappa, tau);
  e.bound = rhs.d();
  e.log_exact = log_of(c);
  e.pass = le_exp_mpfr(c, rhs);
  return e;
}

EntropySweep entropy_sweep(int l, double kappa, double tau) {
  if (l < 1) throw std::invalid_argument("entropy_sweep: l must be >= 1");
  if (!(kappa > 0.0 && kappa < 1.0)) throw std::invalid_argument("entropy_sweep: kappa must lie in (0,1)");
  EntropySweep sw;
  sw.l = l;
  sw.kappa = kappa;
  sw.tau = tau;
  Mpfr rhs, e;
  entropy_rhs(rhs, l, kappa, tau);
  mpfr_exp(e.v, rhs.v, MPFR_RNDD);
  const double bound = rhs.d();
  const auto t_max = static_cast<int>(std::floor(kappa * l));
  const auto L = static_cast<unsigned long>(l);
  mpz_class c = 1;
  double worst_margin = std::numeric_limits<double>::infinity();
  for (int t = 0; t <= t_max; ++t) {
    if (t > 0) {
      c *= L - static_cast<unsigned long>(t) + 1;
      c /= static_cast<unsigned long>(t);
    }
    EntropyCheck ec;
    ec.l = l;
    ec.t = t;
    ec.kappa = kappa;
    ec.tau = tau;
    ec.bound = bound;
    ec.log_exact = log_of(c);
    ec.pass = mpfr_cmp_z(e.v, c.get_mpz_t()) >= 0;
    ++sw.cells;
    if (!ec.pass) ++sw.failures;
    if (bound - ec.log_exact < worst_margin) {
      worst_margin = bound - ec.log_exact;
      sw.worst = ec;
    }
  }
  return sw;
}

EntropyCheck entropy_bound(int l, int t, double kappa, double tau) {
  const double k0 = kappa0(tau);
  if (kappa > k0)
    throw std::invalid_argument("entropy_bound: kappa exceeds kappa0(tau) = " + std::to_string(k0));
  if (static_cast<double>(t) > kappa * l) throw std::invalid_argument("entropy_bound: need t <= kappa l");
  return entropy_bound_unchecked(l, t, kappa, tau);
}

LtConstraints lt_constraints(int n, int l, int t, double mu, double sigma) {
  if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("lt_constraints: mu must lie in (0,1)");
  if (!(sigma > 1.0)) throw std::invalid_argument("lt_constraints: sigma must exceed 1");
  if (!(1 <= l && l <= n) || t < 0) throw std::invalid_argument("lt_constraints: need 1 <= l <= n, t >= 0");
  LtConstraints c;
  c.outside_ratio = static_cast<double>(n - l) / l;
  c.outside_limit = mu / (8.0 * std::log(sigma));
  c.visit_ratio = static_cast<double>(t) / l;
  c.visit_limit = mu / (-4.0 * std::log(mu));
  c.outside_pass = c.outside_ratio <= c.outside_limit;
  c.visit_pass = c.visit_ratio <= c.visit_limit;
  return c;
}

double delta_bound(int n, double mu) {
  if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("delta_bound: mu must lie in (0,1)");
  if (n < 1) throw std::invalid_argument("delta_bound: n must be >= 1");
  const double nn = n;
  return mu / (-4.0 * std::log(mu)) * nn * nn * std::exp(-0.25 * mu * nn);
}

double delta_argmax(double mu) {
  if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("delta_argmax: mu must lie in (0,1)");
  return 8.0 / mu;
}

int smallest_n_below(double mu, double target, int n_limit) {
  for (int n = 1; n <= n_limit; ++n)
    if (delta_bound(n, mu) < target) return n;
  return 0;
}

LemmaCheck lemma_cell(int l, int t, double mu) {
  if (!(1 <= t && t <= l)) throw std::invalid_argument("lemma_cell: need 1 <= t <= l");
  LemmaCheck c;
  c.l = l;
  c.t = t;
  c.mu = mu;
  const mpz_class b = binomial(static_cast<unsigned long>(l), static_cast<unsigned long>(t - 1));
  Mpfr rhs;
  mpfr_set_d(rhs.v, mu, MPFR_RNDN);
  mpfr_mul_si(rhs.v, rhs.v, 13L * l, MPFR_RNDD);
  mpfr_div_si(rhs.v, rhs.v, 32, MPFR_RNDD);
  c.bound = rhs.d();
  c.log_exact = log_of(b);
  c.pass = le_exp_mpfr(b, rhs);
  return c;
}

}  // namespace repeller::bounds
