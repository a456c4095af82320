#include "repeller/bounds/volume_chain.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "repeller/bounds/inequalities.hpp"

namespace repeller::bounds {

bool ChainReport::rows_pass() const {
  for (const auto& r : rows)
    if (r.admissible && !(r.intermediate_pass && r.final_pass && r.lemma_pass)) return false;
  return true;
}

ChainReport volume_chain_check(double mu, double sigma, int eta, int n, std::span<const MeasuredCell> cells) {
  if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("volume_chain_check: mu must lie in (0,1)");
  if (n < 1) throw std::invalid_argument("volume_chain_check: n must be >= 1");
  ChainReport rep;
  rep.mu = mu;
  rep.sigma = sigma;
  rep.n = n;
  rep.eta = eta;
  rep.eta_ok = eta <= 1000.0 * sigma * sigma;
  rep.delta = delta_bound(n, mu);
  rep.count_factor = mu / (-4.0 * std::log(mu)) * n * n;
  const double final_bound = -0.25 * mu * n;

  for (const auto& c : cells) {
    ChainRow row;
    row.l = c.l;
    row.t = c.t;
    row.volume_hi = c.volume_hi;
    row.final_bound = final_bound;
    row.log_measured = c.volume_hi > 0.0 ? std::log(c.volume_hi) : -std::numeric_limits<double>::infinity();
    rep.total_volume += c.volume_hi;
    if (c.l < 1 || c.t < 1) {
      row.skip_reason = "no visit to the degenerate branch";
    } else if (c.l > n) {
      row.skip_reason = "l exceeds n";
    } else {
      const LtConstraints lt = lt_constraints(n, c.l, c.t, mu, sigma);
      if (!lt.outside_pass)
        row.skip_reason = "(n-l)/l above mu/(8 log sigma)";
      else if (!lt.visit_pass)
        row.skip_reason = "t/l above mu/(-4 log mu)";
      else
        row.admissible = true;
    }
    if (row.admissible) {
      const double l = c.l, nl = n - c.l;
      row.intermediate = 13.0 / 32.0 * mu * l + nl * std::log(2.0) + nl * std::log(eta / (sigma * sigma)) -
                         61.0 / 32.0 * mu * l;
      row.intermediate_pass = row.log_measured <= row.intermediate;
      row.final_pass = row.log_measured <= final_bound;
      row.lemma_pass = lemma_cell(c.l, c.t, mu).pass;
    }
    rep.rows.push_back(row);
  }
  rep.sum_pass = rep.total_volume <= std::exp(final_bound);
  rep.delta_pass = rep.total_volume <= rep.delta;
  return rep;
}

}  // namespace repeller::bounds
