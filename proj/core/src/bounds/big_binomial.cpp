#include "repeller/bounds/big_binomial.hpp"

#include <mpfr.h>

namespace repeller::bounds {

namespace {

constexpr mpfr_prec_t kPrec = 256;

struct Mpfr {
  mpfr_t v;
  Mpfr() { mpfr_init2(v, kPrec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

}  // namespace

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

double log_of(const mpz_class& v) {
  Mpfr x;
  mpfr_set_z(x.v, v.get_mpz_t(), MPFR_RNDN);
  mpfr_log(x.v, x.v, MPFR_RNDN);
  return mpfr_get_d(x.v, MPFR_RNDN);
}

double log_binomial(unsigned long n, unsigned long k) { return log_of(binomial(n, k)); }

bool le_exp(const mpz_class& v, double x) {
  Mpfr e;
  mpfr_set_d(e.v, x, MPFR_RNDD);
  mpfr_exp(e.v, e.v, MPFR_RNDD);
  return mpfr_cmp_z(e.v, v.get_mpz_t()) >= 0;
}

bool exp_le(double x, const mpz_class& v) {
  Mpfr e;
  mpfr_set_d(e.v, x, MPFR_RNDU);
  mpfr_exp(e.v, e.v, MPFR_RNDU);
  return mpfr_cmp_z(e.v, v.get_mpz_t()) <= 0;
}

bool binomial_row_sums_to_power(unsigned long m) {
  mpz_class sum = 0;
  for (unsigned long j = 0; j <= m; ++j) sum += binomial(m, j);
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, m);
  return sum == p;
}

}  // namespace repeller::bounds
