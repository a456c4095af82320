#include "repeller/holes/a2_report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "repeller/bounds/inequalities.hpp"

namespace repeller::holes {

const char* to_string(A2Status s) noexcept {
  switch (s) {
    case A2Status::pass: return "pass";
    case A2Status::fail: return "fail";
    case A2Status::inconclusive: return "inconclusive";
    case A2Status::out_of_contract: return "out_of_contract";
  }
  return "inconclusive";
}

std::vector<A2Row> a2_rows(const MapWithHoles& map, double c0, int n_min, int n_max, int n0,
                           const CensusOptions& opts) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("a2_rows: need 1 <= n_min <= n_max");
  if (!(c0 > 0.0)) throw std::invalid_argument("a2_rows: c0 must be positive");
  const double mu = map.delta_parameter();
  const double mu_f = map.hole_volume();
  const double threshold = c0 * mu_f;
  const Census census = run_census(map, n_max, threshold, opts);
  const bool delta_defined = mu > 0.0 && mu < 1.0;

  std::vector<A2Row> rows;
  for (int n = n_min; n <= n_max; ++n) {
    const BadVolume bv = bad_volume(census, n);
    A2Row r;
    r.n = n;
    r.mu = mu;
    r.mu_f = mu_f;
    r.threshold = threshold;
    r.kept = bv.kept;
    r.pruned = bv.pruned;
    r.vol_lo = bv.vol_lo;
    r.vol_hi = bv.vol_hi;
    r.truncated = bv.truncated;
    r.delta = delta_defined ? bounds::delta_bound(n, mu) : std::numeric_limits<double>::quiet_NaN();
    if (n < n0)
      r.status = A2Status::out_of_contract;
    else if (bv.truncated || !delta_defined)
      r.status = A2Status::inconclusive;
    else if (r.vol_hi <= r.delta)
      r.status = A2Status::pass;
    else if (r.vol_lo >= r.delta)
      r.status = A2Status::fail;
    else
      r.status = A2Status::inconclusive;
    rows.push_back(r);
  }
  return rows;
}

std::string a2_csv_header() { return "n,mu,mu_f,threshold,kept,pruned,vol_lo,vol_hi,delta,pass"; }

void write_a2_csv(std::ostream& out, const std::vector<A2Row>& rows) {
  out << a2_csv_header() << '\n';
  char buf[512];
  for (const A2Row& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.10g,%.10g,%.10g,%zu,%zu,%.10g,%.10g,%.10g,%s\n", r.n, r.mu, r.mu_f,
                  r.threshold, r.kept, r.pruned, r.vol_lo, r.vol_hi, r.delta, to_string(r.status));
    out << buf;
  }
}

bool all_pass(const std::vector<A2Row>& rows) {
  bool any = false;
  for (const A2Row& r : rows) {
    if (r.status == A2Status::out_of_contract) continue;
    if (r.status != A2Status::pass) return false;
    any = true;
  }
  return any;
}

}  // namespace repeller::holes
