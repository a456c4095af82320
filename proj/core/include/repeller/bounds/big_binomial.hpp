#pragma once

#include <string>

#include <gmpxx.h>

namespace repeller::bounds {

/// Exact C(n, k) (zero when k > n).
mpz_class binomial(unsigned long n, unsigned long k);

/// Natural log of a positive integer, via 256-bit MPFR, rounded to double.
double log_of(const mpz_class& v);
double log_binomial(unsigned long n, unsigned long k);

/// Exact decision of v <= exp(x): exp(x) is evaluated at 256 bits rounded
/// towards -inf, so a true answer is never reported for a false inequality.
bool le_exp(const mpz_class& v, double x);
/// exp(x) <= v, with exp(x) rounded towards +inf.
bool exp_le(double x, const mpz_class& v);

/// Sum_{j=0}^{m} C(m, j) == 2^m, exactly.
bool binomial_row_sums_to_power(unsigned long m);

}  // namespace repeller::bounds
