#pragma once

#include <gmpxx.h>

namespace repeller::bounds {

/// Counts of n-symbol itineraries that alternate k_1 >= 1 steps outside the
/// degenerate branch with l_1 >= 1 steps inside, t times, l steps inside in total.
struct PatternCount {
  int n = 0, l = 0, t = 0, m_outside = 0;
  /// C(l-1, t-1) C(n-l-1, t-1) m^(n-l): compositions times outside symbols.
  mpz_class exact;
  /// C(l, t-1) C(n-l, t-1) (m+1)^(n-l).
  mpz_class bound;
  bool pass = false;
};

/// Requires 1 <= t <= l <= n, t <= n - l and m_outside >= 1.
PatternCount count_patterns(int n, int l, int t, int m_outside);

/// Brute-force count over all (m+1)^n words (symbol 0 inside). For small n only.
mpz_class enumerate_patterns(int n, int l, int t, int m_outside);

}  // namespace repeller::bounds
