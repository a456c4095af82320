#pragma once

#include <cstddef>

namespace repeller::bounds {

struct StirlingCheck {
  int l = 0, t = 0;
  double log_exact = 0.0;  // log C(l, t)
  double log_bound = 0.0;  // l log l - t log t - (l-t) log(l-t)
  bool pass = false;       // C(l,t) t^t (l-t)^(l-t) <= l^l, exact
  bool prefactor_pass = false;
};

/// Requires 1 <= t and 2t < l.
StirlingCheck stirling_binomial_bound(int l, int t);

/// (1 + 1/(4l)) / sqrt(t pi) <= 1, decided exactly through pi > 333/106.
bool prefactor_inequality(int l, int t);

/// Every t with 1 <= t and 2t < l for one l; `worst` is the cell with the
/// smallest log margin.
struct StirlingSweep {
  int l = 0;
  std::size_t cells = 0;
  std::size_t failures = 0;
  std::size_t prefactor_failures = 0;
  StirlingCheck worst;
};
StirlingSweep stirling_sweep(int l);

struct EntropyCheck {
  int l = 0, t = 0;
  double kappa = 0.0, tau = 0.0;
  double log_exact = 0.0;
  double bound = 0.0;  // l (1 + tau) kappa log(1/kappa)
  bool pass = false;
};

/// e^(-1/tau).
double kappa0(double tau);

/// Requires kappa <= kappa0(tau) and 0 <= t <= kappa l.
EntropyCheck entropy_bound(int l, int t, double kappa, double tau);
/// As above without the kappa0 precondition; used by the sharpness probe.
EntropyCheck entropy_bound_unchecked(int l, int t, double kappa, double tau);

/// Every t in [0, floor(kappa l)] for one (l, kappa, tau), without the kappa0
/// precondition; the right-hand side is exponentiated once.
struct EntropySweep {
  int l = 0;
  double kappa = 0.0, tau = 0.0;
  std::size_t cells = 0;
  std::size_t failures = 0;
  EntropyCheck worst;
};
EntropySweep entropy_sweep(int l, double kappa, double tau);

struct LtConstraints {
  double outside_ratio = 0.0, outside_limit = 0.0;  // (n-l)/l <= mu / (8 log sigma)
  double visit_ratio = 0.0, visit_limit = 0.0;      // t/l <= mu / (-4 log mu)
  bool outside_pass = false;
  bool visit_pass = false;
  bool pass() const noexcept { return outside_pass && visit_pass; }
};

/// Requires mu in (0,1), sigma > 1, 1 <= l <= n.
LtConstraints lt_constraints(int n, int l, int t, double mu, double sigma);

/// mu / (-4 log mu) n^2 e^(-mu n / 4). Requires mu in (0,1), n >= 1.
double delta_bound(int n, double mu);
/// Real maximiser 8/mu of n -> delta(n, mu).
double delta_argmax(double mu);
/// Smallest n >= 1 with delta(n, mu) < target (0 if none below n_limit).
int smallest_n_below(double mu, double target, int n_limit = 1 << 24);

struct LemmaCheck {
  int l = 0, t = 0;
  double mu = 0.0;
  double log_exact = 0.0;  // log C(l, t-1)
  double bound = 0.0;      // (13/32) mu l
  bool pass = false;
};

/// log C(l, t-1) <= (13/32) mu l, decided exactly. Requires 1 <= t <= l.
LemmaCheck lemma_cell(int l, int t, double mu);

}  // namespace repeller::bounds
