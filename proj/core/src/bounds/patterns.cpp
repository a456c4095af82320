#include "repeller/bounds/patterns.hpp"

#include <stdexcept>
#include <vector>

#include "repeller/bounds/big_binomial.hpp"

namespace repeller::bounds {

namespace {
mpz_class power(unsigned long b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}
}  // namespace

PatternCount count_patterns(int n, int l, int t, int m_outside) {
  if (!(1 <= t && t <= l && l <= n)) throw std::invalid_argument("count_patterns: need 1 <= t <= l <= n");
  if (t > n - l) throw std::invalid_argument("count_patterns: alternation needs t <= n - l outside steps");
  if (m_outside < 1) throw std::invalid_argument("count_patterns: m_outside must be >= 1");
  const auto N = static_cast<unsigned long>(n), L = static_cast<unsigned long>(l), T = static_cast<unsigned long>(t);
  const auto M = static_cast<unsigned long>(m_outside);
  PatternCount pc{n, l, t, m_outside, 0, 0, false};
  pc.exact = binomial(L - 1, T - 1) * binomial(N - L - 1, T - 1) * power(M, N - L);
  pc.bound = binomial(L, T - 1) * binomial(N - L, T - 1) * power(M + 1, N - L);
  pc.pass = pc.exact <= pc.bound;
  return pc;
}

mpz_class enumerate_patterns(int n, int l, int t, int m_outside) {
  if (n < 1 || n > 16) throw std::invalid_argument("enumerate_patterns: n must lie in [1, 16]");
  const int alphabet = m_outside + 1;
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  mpz_class count = 0;
  while (true) {
    if (w.front() != 0 && w.back() == 0) {
      int inside = 0, runs = 0;
      for (int i = 0; i < n; ++i) {
        if (w[static_cast<std::size_t>(i)] == 0) {
          ++inside;
          if (i == 0 || w[static_cast<std::size_t>(i - 1)] != 0) ++runs;
        }
      }
      if (inside == l && runs == t) ++count;
    }
    int i = 0;
    while (i < n && ++w[static_cast<std::size_t>(i)] == alphabet) w[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace repeller::bounds
