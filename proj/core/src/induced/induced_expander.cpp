#include "repeller/induced/induced_expander.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "repeller/bounds/inequalities.hpp"
#include "repeller/geometry/parallel.hpp"
#include "repeller/geometry/rng.hpp"
#include "repeller/holes/expansion.hpp"

namespace repeller::induced {

InducedExpander InducedExpander::build(const holes::MapWithHoles& map, int n, double threshold,
                                       const holes::CensusOptions& opts) {
  InducedExpander F;
  F.map_ = &map;
  F.census_ = std::make_shared<const holes::Census>(holes::run_census(map, n, threshold, opts));
  F.partition_ = holes::sn_partition(*F.census_);
  F.degenerate_ = std::none_of(F.census_->outcomes().begin(), F.census_->outcomes().end(),
                               [](int o) { return o >= 1; });
  return F;
}

int InducedExpander::return_time(const TorusPoint& x) const {
  const int o = census_->classify(*map_, x);
  return o >= 1 ? o : 0;
}

InducedExpander::Evaluation InducedExpander::evaluate(const TorusPoint& x) const {
  Evaluation e;
  e.return_time = return_time(x);
  e.in_hole = e.return_time == 0;
  e.image = x;
  for (int j = 0; j < e.return_time; ++j) e.image = map_->forward(e.image);
  return e;
}

geometry::Region InducedExpander::hole() const {
  const InducedExpander self = *this;
  return geometry::Region("induced hole", geometry::Box::unit(map_->dimension()),
                          [self](const TorusPoint& p) { return self.return_time(p) == 0; });
}

std::vector<std::size_t> InducedExpander::return_time_histogram() const {
  std::vector<std::size_t> h(static_cast<std::size_t>(depth()) + 1, 0);
  for (int o : census_->outcomes()) ++h[o >= 1 ? static_cast<std::size_t>(o) : 0];
  return h;
}

ExpansionCheck verify_expansion(const InducedExpander& F, std::size_t samples, std::uint64_t seed, unsigned jobs) {
  ExpansionCheck c;
  c.n = F.depth();
  c.threshold = F.threshold();
  c.samples = samples;
  const int d = F.base().dimension();
  constexpr std::size_t kBlock = 1024;
  const std::size_t blocks = (samples + kBlock - 1) / kBlock;

  struct Partial {
    std::size_t domain = 0;
    double margin = std::numeric_limits<double>::infinity();
    TorusPoint point;
    int j = 0;
  };
  std::vector<Partial> parts(blocks);
  geometry::parallel_blocks(blocks, std::max(1u, jobs), [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t blk = b; blk < e; ++blk) {
      geometry::Rng rng(seed, 0x1d, blk);
      Partial& p = parts[blk];
      const std::size_t end = std::min(samples, (blk + 1) * kBlock);
      for (std::size_t i = blk * kBlock; i < end; ++i) {
        std::array<double, geometry::kMaxDim> x{};
        for (int a = 0; a < d; ++a) x[static_cast<std::size_t>(a)] = rng.uniform();
        const TorusPoint pt = TorusPoint::wrapped(x, d);
        const int j = F.return_time(pt);
        if (j == 0) continue;
        ++p.domain;
        const double m = holes::log_least_expansion(F.base(), pt, j) - F.threshold() * j;
        if (m < p.margin) {
          p.margin = m;
          p.point = pt;
          p.j = j;
        }
      }
    }
  });

  c.min_margin = std::numeric_limits<double>::infinity();
  for (const Partial& p : parts) {
    c.domain_samples += p.domain;
    if (p.margin < c.min_margin) {
      c.min_margin = p.margin;
      c.worst_point = p.point;
      c.worst_return_time = p.j;
    }
  }
  c.pass = c.domain_samples > 0 && c.min_margin > 0.0;
  return c;
}

HoleVolume induced_hole_volume(const InducedExpander& F, std::size_t samples, std::uint64_t seed) {
  const holes::MapWithHoles& f = F.base();
  HoleVolume h;
  h.measured = geometry::lebesgue_estimate(F.hole(), samples, seed);

  const double mu = f.delta_parameter();
  const double mu_f = f.hole_volume();
  const int n = F.depth();
  h.delta = mu > 0.0 && mu < 1.0 ? bounds::delta_bound(n, mu) : 0.0;

  std::vector<double> logs;
  if (h.delta > 0.0) logs.push_back(std::log(h.delta));
  if (mu_f > 0.0) {
    const double lmu = std::log(mu_f);
    const double step = std::log(f.inverse_norm_bound() * f.branch_count());
    logs.push_back(lmu);
    for (int j = 1; j <= n - 1; ++j) logs.push_back(lmu + j * step);
  }
  if (logs.empty()) {
    h.log_bound = -std::numeric_limits<double>::infinity();
    h.bound = 0.0;
  } else {
    const double top = *std::max_element(logs.begin(), logs.end());
    double s = 0.0;
    for (double l : logs) s += std::exp(l - top);
    h.log_bound = top + std::log(s);
    h.bound = std::exp(h.log_bound);
  }
  h.pass = h.measured.value <= h.bound;
  return h;
}

int choose_n0(double mu, double mu_f, int n_limit) { return bounds::smallest_n_below(mu, mu_f, n_limit); }

nlohmann::ordered_json to_json(const ExpansionCheck& e, const HoleVolume& h) {
  nlohmann::ordered_json j;
  j["n"] = e.n;
  j["threshold"] = e.threshold;
  j["samples"] = e.samples;
  j["domain_samples"] = e.domain_samples;
  j["min_margin"] = std::isfinite(e.min_margin) ? nlohmann::ordered_json(e.min_margin) : nlohmann::ordered_json();
  auto wp = nlohmann::ordered_json::array();
  for (int a = 0; a < e.worst_point.dim(); ++a) wp.push_back(e.worst_point[a]);
  j["worst_point"] = wp;
  j["worst_return_time"] = e.worst_return_time;
  j["measured_hole"] = {{"value", h.measured.value},
                        {"lower", h.measured.lower()},
                        {"upper", h.measured.upper()},
                        {"samples", h.measured.samples}};
  j["bound"] = std::isfinite(h.bound) ? nlohmann::ordered_json(h.bound) : nlohmann::ordered_json();
  j["log_bound"] = h.log_bound;
  j["delta"] = h.delta;
  j["expansion_pass"] = e.pass;
  j["hole_pass"] = h.pass;
  return j;
}

}  // namespace repeller::induced
