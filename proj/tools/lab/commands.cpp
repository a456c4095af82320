#include "lab/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <numbers>

#include <json.hpp>

#include "lab/cache.hpp"
#include "lab/svg.hpp"
#include "repeller/bounds/big_binomial.hpp"
#include "repeller/bounds/inequalities.hpp"
#include "repeller/bounds/patterns.hpp"
#include "repeller/bounds/volume_chain.hpp"
#include "repeller/families/diaz_viana.hpp"
#include "repeller/families/escape.hpp"
#include "repeller/families/hopf2d.hpp"
#include "repeller/families/hopf3d.hpp"
#include "repeller/families/registry.hpp"
#include "repeller/geometry/box_count.hpp"
#include "repeller/geometry/box_dimension.hpp"
#include "repeller/holes/a2_report.hpp"
#include "repeller/induced/induced_expander.hpp"

namespace repeller::lab {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kCacheVersion = "repeller-lab 1";

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void write_text(const fs::path& dir, const std::string& name, const std::string& text, CommandResult& r) {
  fs::create_directories(dir);
  std::ofstream(dir / name, std::ios::binary) << text;
  r.files.push_back(name);
}

std::string config_header(const Config& cfg) {
  std::string h;
  std::istringstream in(cfg.resolved());
  std::string line;
  while (std::getline(in, line)) h += "# " + line + "\n";
  h += "# config_hash = " + config_hash(cfg) + "\n";
  return h;
}

json config_json(const Config& cfg) {
  json j = json::object();
  for (const auto& [k, v] : cfg.values()) j[k] = v;
  return j;
}

families::FamilySpec family_spec(const Config& cfg, double mu) {
  families::FamilySpec s;
  s.family = cfg.get_string("family", "hopf2d");
  const auto& names = families::family_names();
  if (std::find(names.begin(), names.end(), s.family) == names.end())
    throw ConfigError("unknown family '" + s.family + "'");
  s.mu = mu;
  s.delta0 = cfg.get_double("delta0", -1.0);
  s.delta1 = cfg.get_double("delta1", -1.0);
  s.sigma1 = cfg.get_double("sigma1", -1.0);
  s.sigma = cfg.get_double("sigma", -1.0);
  s.trap_fraction = cfg.get_double("trap_fraction", 0.5);
  return s;
}

std::uint64_t seed_of(const Config& cfg) { return static_cast<std::uint64_t>(cfg.get_int("seed", 1)); }

long positive(const Config& cfg, const std::string& key, long fallback, long min = 1) {
  const long v = cfg.get_int(key, fallback);
  if (v < min) throw ConfigError("'" + key + "' must be >= " + std::to_string(min));
  return v;
}

/// Derived constants of one family member, echoed into outputs.
json derived_constants(const families::FamilySpec& spec) {
  json d = json::object();
  d["mu"] = spec.mu;
  if (spec.family == "hopf2d") {
    families::Hopf2DParams p;
    p.mu = spec.mu;
    if (spec.delta0 > 0) p.delta0 = spec.delta0;
    if (spec.delta1 > 0) p.delta1 = spec.delta1;
    if (spec.sigma1 > 0) p.sigma1 = spec.sigma1;
    const families::HopfModel2D m(p);
    d["mu_f"] = m.hole_volume();
    d["rho_inv"] = m.rho_inv();
    d["b1"] = m.phi().b1();
    d["K"] = m.K();
    d["c0"] = m.c0();
    d["C0"] = m.phi().c0();
  } else if (spec.family == "hopf3d") {
    const auto model = families::make_model(spec);
    const auto& m = dynamic_cast<const families::HopfModel3D&>(*model);
    d["mu_f"] = std::numbers::pi * m.rho_inv() * m.rho_inv();
    d["rho_inv"] = m.rho_inv();
    d["lambda"] = m.lambda();
    d["sigma"] = m.sigma();
    d["alpha"] = m.alpha();
    d["C0"] = m.phi().c0();
  } else {
    const auto map = families::make_map(spec);
    d["mu_f"] = map->hole_volume();
    if (spec.family == "diaz-viana") {
      const auto& f = dynamic_cast<const families::DiazVianaFamily&>(*map);
      d["rho_inv"] = f.rho_inv();
      if (f.hole_volume() > 0.0) d["K_t"] = f.K_t();
    }
    d["c0"] = families::threshold_constant(spec);
  }
  return d;
}

struct DimDefaults {
  int base, level_min, level_max;
  long horizon;
  long samples_per_box;
  std::vector<double> grid;
};

DimDefaults dim_defaults(const std::string& family) {
  if (family == "hopf3d") return {2, 3, 7, 100, 8, {0.01, 0.1}};
  if (family == "tripling") return {3, 1, 8, 12, 64, {0.0}};
  if (family == "linear2d") return {2, 3, 10, 100, 64, {0.0}};
  if (family == "diaz-viana") return {2, 3, 16, 100, 64, {0.01}};
  return {2, 3, 10, 100, 64, {0.005, 0.01, 0.02, 0.05, 0.1}};
}

}  // namespace

std::string config_hash(const Config& cfg) { return git_blob_hash(cfg.resolved()); }

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"dim", "bounds", "a2", "induced", "sweep-all"};
  return names;
}

// ---------------------------------------------------------------------------

CommandResult cmd_dim(const Config& cfg, const RunOptions& opts) {
  CommandResult res;
  const std::string family = cfg.get_string("family", "hopf2d");
  const DimDefaults def = dim_defaults(family);
  const std::vector<double> grid = mu_grid(cfg, def.grid);
  const int base = static_cast<int>(positive(cfg, "base", def.base, 2));
  const int level_min = static_cast<int>(positive(cfg, "level_min", def.level_min, 0));
  const int level_max = static_cast<int>(positive(cfg, "level_max", def.level_max, 1));
  const auto horizon = static_cast<std::size_t>(positive(cfg, "horizon", def.horizon));
  const auto spb = static_cast<std::size_t>(positive(cfg, "samples_per_box", def.samples_per_box));
  const double tolerance = cfg.get_double("tolerance", 0.005);
  const int doublings = static_cast<int>(positive(cfg, "max_doublings", 3, 0));
  const auto trap_samples = static_cast<std::size_t>(positive(cfg, "trap_samples", 10000));
  const std::uint64_t seed = seed_of(cfg);
  if (level_max <= level_min) throw ConfigError("level_max must exceed level_min");
  const bool coarse = family == "hopf3d";
  if (coarse && (level_max > 7 || base != 2 || horizon > 100))
    throw ConfigError("3D runs are capped at a 128^3 grid (base 2, level_max <= 7) and horizon <= 100");
  const bool hopf = family == "hopf2d" || family == "hopf3d";

  std::string csv = config_header(cfg);
  if (coarse) csv += "# resolution = coarse\n";
  json rows = json::array();
  std::string body = "mu,mu_f,rho_inv,dim,ci,residual,flat_warning,trap,status\n";
  Series bd{"box dimension", {}, {}, {}, {}, false};

  for (double mu : grid) {
    const auto t0 = std::chrono::steady_clock::now();
    json row;
    row["mu"] = mu;
    std::string status = "ok", trap = "none";
    double mu_f = std::numeric_limits<double>::quiet_NaN(), rho = mu_f;
    try {
      const families::FamilySpec spec = family_spec(cfg, mu);
      const json derived = derived_constants(spec);
      row["derived"] = derived;
      mu_f = derived.value("mu_f", mu_f);
      rho = derived.value("rho_inv", rho);
      csv += "# derived mu=" + num(mu) + ": " + derived.dump() + "\n";

      const auto model = families::make_model(spec);
      if (hopf && mu <= 0.0) status = "no hole";
      if (model->has_trap()) {
        if (hopf) {
          const auto inv = families::check_trap_invariance(*model, trap_samples, seed);
          trap = inv.verified ? "verified" : "unverified";
          if (!inv.verified) status = "advisory";
        } else {
          trap = "hole";
        }
      }
      geometry::EscapeCoverOptions eo;
      eo.base = base;
      eo.level = level_max;
      eo.samples_per_box = spb;
      eo.tolerance = tolerance;
      eo.max_doublings = doublings;
      eo.seed = seed;
      eo.jobs = opts.jobs;
      const auto cover = geometry::escape_cover(model->dimension(), families::survival_test(*model, horizon), eo);
      std::vector<geometry::ScaleCount> scales;
      for (const auto& [eps, count] : geometry::ladder_counts(cover.cover, level_min)) scales.push_back({eps, count});
      const auto est = geometry::box_dimension(scales, model->dimension());
      row["estimate"] = json::parse(geometry::to_json(est));
      row["evaluations"] = cover.evaluations;
      row["doublings"] = cover.doublings;
      body += num(mu) + "," + num(mu_f) + "," + num(rho) + "," + num(est.slope) + "," + num(est.ci_half_width) +
              "," + num(est.residual) + "," + (est.flat_warning ? "true" : "false") + "," + trap + "," + status + "\n";
      bd.x.push_back(mu);
      bd.y.push_back(est.slope);
      bd.lo.push_back(est.slope - est.ci_half_width);
      bd.hi.push_back(est.slope + est.ci_half_width);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      status = std::string("error: ") + e.what();
      std::replace(status.begin(), status.end(), ',', ';');
      body += num(mu) + "," + num(mu_f) + "," + num(rho) + ",,,,," + trap + "," + status + "\n";
    }
    row["trap"] = trap;
    row["status"] = status;
    if (coarse) row["resolution"] = "coarse";
    rows.push_back(row);
    if (!opts.quiet) {
      const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      std::fprintf(stderr, "dim %s mu=%s: %s (%.1fs)\n", family.c_str(), num(mu).c_str(), status.c_str(), dt);
    }
  }

  write_text(opts.out, "dim.csv", csv + body, res);
  json j;
  j["config_hash"] = config_hash(cfg);
  j["config"] = config_json(cfg);
  j["family"] = family;
  j["rows"] = rows;
  write_text(opts.out, "dim_estimates.json", j.dump(2) + "\n", res);
  PlotSpec ps;
  ps.title = family + ": box dimension of the survivor set";
  ps.xlabel = "mu";
  ps.ylabel = "box dimension";
  write_text(opts.out, "dim.svg", render_svg(ps, {bd}), res);
  return res;
}

// ---------------------------------------------------------------------------

namespace {

struct BoundsTable {
  std::string name;
  std::string csv = "n,l,t,mu,exact,bound,pass\n";
  std::size_t cells = 0, failures = 0, expected_failures = 0, unexpected_passes = 0;
  json failure_list = json::array();

  void row(const std::string& n, const std::string& l, const std::string& t, const std::string& mu,
           const std::string& exact, const std::string& bound, bool ok, bool expect_fail = false) {
    ++cells;
    std::string verdict = ok ? "pass" : "fail";
    if (expect_fail) {
      verdict = ok ? "xpass" : "xfail";
      if (ok)
        ++unexpected_passes;
      else
        ++expected_failures;
    } else if (!ok) {
      ++failures;
      if (failure_list.size() < 100)
        failure_list.push_back({{"n", n}, {"l", l}, {"t", t}, {"mu", mu}, {"exact", exact}, {"bound", bound}});
    }
    csv += n + "," + l + "," + t + "," + mu + "," + exact + "," + bound + "," + verdict + "\n";
  }

  json summary() const {
    return {{"cells", cells},
            {"failures", failures},
            {"expected_failures", expected_failures},
            {"unexpected_passes", unexpected_passes},
            {"failure_list", failure_list}};
  }
};

std::string str(const mpz_class& v) { return v.get_str(); }
std::string istr(long v) { return std::to_string(v); }

}  // namespace

CommandResult cmd_bounds(const Config& cfg, const RunOptions& opts) {
  CommandResult res;
  std::vector<BoundsTable> tables;

  // Cylinder pattern counts, cross-checked by enumeration for short words.
  {
    BoundsTable t{"patterns"};
    const long n_max = cfg.get_int("patterns_n_max", 20);
    for (int m : {1, 2, 9})
      for (int n = 2; n <= n_max; ++n)
        for (int l = 1; l < n; ++l)
          for (int tt = 1; tt <= std::min(l, n - l); ++tt) {
            const auto pc = bounds::count_patterns(n, l, tt, m);
            bool ok = pc.pass;
            if (n <= 8 && m <= 2) ok = ok && bounds::enumerate_patterns(n, l, tt, m) == pc.exact;
            t.row(istr(n), istr(l), istr(tt), "", str(pc.exact), str(pc.bound), ok);
          }
    tables.push_back(std::move(t));
  }
  // Stirling bound with its prefactor; one row per l, reporting the tightest t.
  {
    BoundsTable t{"stirling"};
    const long l_max = cfg.get_int("stirling_l_max", 1000);
    for (int l = 3; l <= l_max; ++l) {
      const auto sw = bounds::stirling_sweep(l);
      t.row("", istr(l), istr(sw.worst.t), "", num(sw.worst.log_exact), num(sw.worst.log_bound),
            sw.failures == 0 && sw.prefactor_failures == 0);
      t.cells += sw.cells - 1;
    }
    tables.push_back(std::move(t));
  }
  // Entropy bound for kappa <= kappa0(tau).
  {
    BoundsTable t{"entropy"};
    const double tau = cfg.get_double("entropy_tau", 1.0);
    const double k0 = bounds::kappa0(tau);
    const auto kappas = cfg.get_doubles("entropy_kappa_grid", {k0, 0.3, 0.2, 0.1, 0.05, 0.01});
    for (double kappa : kappas)
      if (kappa > k0) throw ConfigError("entropy_kappa_grid entry " + num(kappa) + " exceeds kappa0 = " + num(k0));
    const long l_max = cfg.get_int("entropy_l_max", 1000);
    for (double kappa : kappas)
      for (int l = 1; l <= l_max; ++l) {
        const auto sw = bounds::entropy_sweep(l, kappa, tau);
        t.row("", istr(l), istr(sw.worst.t), "", num(sw.worst.log_exact), num(sw.worst.bound), sw.failures == 0);
        t.cells += sw.cells - 1;
      }
    tables.push_back(std::move(t));
  }
  // Sharpness probe above kappa0: failures are expected for large l.
  {
    BoundsTable t{"probe"};
    const double tau = cfg.get_double("probe_tau", 0.5);
    const double kappa = cfg.get_double("probe_kappa", 0.2);
    const long l_max = cfg.get_int("probe_l_max", 2000);
    if (l_max > 0 && kappa <= bounds::kappa0(tau)) throw ConfigError("probe_kappa must exceed kappa0(probe_tau)");
    for (int l = 1; l <= l_max; ++l) {
      const auto sw = bounds::entropy_sweep(l, kappa, tau);
      t.row("", istr(l), istr(sw.worst.t), "", num(sw.worst.log_exact), num(sw.worst.bound), sw.failures == 0,
            true);
    }
    tables.push_back(std::move(t));
  }
  // Lemma cells log C(l, t-1) <= (13/32) mu l for t <= mu l / (-4 log mu).
  {
    BoundsTable t{"lemma"};
    const long l_max = cfg.get_int("lemma_l_max", 2000);
    auto run = [&](double mu, bool expect_fail) {
      if (!(mu > 0.0 && mu < 1.0)) throw ConfigError("lemma mu values must lie in (0,1)");
      const double slope = mu / (-4.0 * std::log(mu));
      for (int l = 1; l <= l_max; ++l)
        for (int tt = 1; tt <= static_cast<int>(std::floor(slope * l)); ++tt) {
          const auto c = bounds::lemma_cell(l, tt, mu);
          const bool ok = c.pass;
          if (expect_fail && ok) {
            ++t.cells;  // passing cells outside the lemma's range are not rows
            continue;
          }
          t.row("", istr(l), istr(tt), num(mu), num(c.log_exact), num(c.bound), ok, expect_fail);
        }
    };
    for (double mu : cfg.get_doubles("lemma_mu_grid", {0.005, 0.01})) run(mu, false);
    for (double mu : cfg.get_doubles("lemma_outside_mu_grid", {0.05, 0.1})) run(mu, true);
    tables.push_back(std::move(t));
  }
  // delta(n, mu): nonnegative, decreasing past its maximiser.
  json delta_info = json::array();
  {
    BoundsTable t{"delta"};
    const long n_max = cfg.get_int("delta_n_max", 1000);
    for (double mu : cfg.get_doubles("delta_mu_grid", {0.02, 0.05, 0.1})) {
      if (!(mu > 0.0 && mu < 1.0)) throw ConfigError("delta_mu_grid values must lie in (0,1)");
      const double nstar = bounds::delta_argmax(mu);
      int below = 0;
      for (int n = 1; n <= n_max; ++n) {
        const double d = bounds::delta_bound(n, mu);
        const double prev = n > 1 ? bounds::delta_bound(n - 1, mu) : std::numeric_limits<double>::infinity();
        const bool ok = std::isfinite(d) && d >= 0.0 && (n <= std::ceil(nstar) || d < prev);
        if (below == 0 && d < 1e-6) below = n;
        t.row(istr(n), "", "", num(mu), num(d), n > std::ceil(nstar) ? num(prev) : "", ok);
      }
      delta_info.push_back({{"mu", mu}, {"argmax", nstar}, {"first_n_below_1e-6", below}});
    }
    tables.push_back(std::move(t));
  }
  // l-t admissibility, reported but never a failure.
  std::string lt_csv = "n,l,t,mu,outside_ratio,visit_ratio,admissible\n";
  if (cfg.get_int("lt_l", 100) > 0) {
    const double mu = cfg.get_double("lt_mu", 0.1);
    const int l = static_cast<int>(cfg.get_int("lt_l", 100));
    for (int extra = 0; extra <= 10; ++extra)
      for (int tt = 0; tt <= 10; ++tt) {
        const auto c = bounds::lt_constraints(l + extra, l, tt, mu, std::sqrt(10.0));
        lt_csv += istr(l + extra) + "," + istr(l) + "," + istr(tt) + "," + num(mu) + "," + num(c.outside_ratio) + "," +
                  num(c.visit_ratio) + "," + (c.pass() ? "true" : "false") + "\n";
      }
  }
  // Sum_j C(m, j) = 2^m.
  {
    BoundsTable t{"row_sums"};
    const long m_max = cfg.get_int("row_sum_m_max", 64);
    for (long m = 0; m <= m_max; ++m)
      t.row("", "", "", "", istr(m), "", bounds::binomial_row_sums_to_power(static_cast<unsigned long>(m)));
    tables.push_back(std::move(t));
  }
  // Volume chain on the 2D model from census volumes.
  json chain_json = json::object();
  {
    BoundsTable t{"chain"};
    const long n = cfg.get_int("chain_n", 8);
    if (n > 0) {
      const double mu = cfg.get_double("chain_mu", 0.1);
      families::FamilySpec spec = family_spec(cfg, mu);
      spec.family = "hopf2d";
      const auto map = families::make_map(spec);
      holes::CensusOptions co;
      co.samples = static_cast<std::size_t>(positive(cfg, "census_samples", 200000));
      co.seed = seed_of(cfg);
      co.jobs = opts.jobs;
      const double thr = families::threshold_constant(spec) * map->hole_volume();
      const auto cells = holes::q_census(*map, static_cast<int>(n), thr, co);
      const auto rep = bounds::volume_chain_check(mu, std::sqrt(10.0), map->intersection_bound(),
                                                  static_cast<int>(n), cells);
      for (const auto& r : rep.rows)
        t.row(istr(n), istr(r.l), istr(r.t), num(mu), num(r.volume_hi), num(std::exp(r.final_bound)),
              !r.admissible || (r.intermediate_pass && r.final_pass && r.lemma_pass));
      t.row(istr(n), "", "", num(mu), num(rep.total_volume), num(std::exp(-0.25 * mu * static_cast<double>(n))),
            rep.sum_pass && rep.eta_ok);
      chain_json = {{"mu", mu},          {"n", n},
                    {"eta", rep.eta},    {"eta_ok", rep.eta_ok},
                    {"total_volume", rep.total_volume},
                    {"delta", rep.delta}, {"count_factor", rep.count_factor},
                    {"sum_pass", rep.sum_pass}, {"delta_pass", rep.delta_pass}};
      auto skipped = json::array();
      for (const auto& r : rep.rows)
        if (!r.admissible) skipped.push_back({{"l", r.l}, {"t", r.t}, {"reason", r.skip_reason}});
      chain_json["skipped"] = skipped;
    }
    tables.push_back(std::move(t));
  }

  std::size_t cells = 0, failures = 0, xfail = 0;
  json summary;
  summary["config_hash"] = config_hash(cfg);
  summary["config"] = config_json(cfg);
  json suites = json::object();
  for (const auto& t : tables) {
    write_text(opts.out, "bounds_" + t.name + ".csv", t.csv, res);
    suites[t.name] = t.summary();
    cells += t.cells;
    failures += t.failures;
    xfail += t.expected_failures;
  }
  write_text(opts.out, "bounds_lt.csv", lt_csv, res);
  summary["suites"] = suites;
  summary["delta"] = delta_info;
  summary["chain"] = chain_json;
  summary["cells"] = cells;
  summary["failures"] = failures;
  summary["expected_failures"] = xfail;
  summary["pass"] = failures == 0;
  write_text(opts.out, "bounds_summary.json", summary.dump(2) + "\n", res);

  std::printf("bounds: %s (%zu cells, %zu failures, %zu expected failures)\n", failures == 0 ? "PASS" : "FAIL", cells,
              failures, xfail);
  res.exit_code = failures == 0 ? kExitOk : kExitViolation;
  return res;
}

// ---------------------------------------------------------------------------

CommandResult cmd_a2(const Config& cfg, const RunOptions& opts) {
  CommandResult res;
  const std::string family = cfg.get_string("family", "hopf2d");
  if (!families::has_symbolic_map(family)) throw ConfigError("a2 needs a family with branch structure");
  const bool dv = family == "diaz-viana";
  const std::vector<double> grid = mu_grid(cfg, dv ? std::vector<double>{0.001, 0.01, 0.05}
                                                   : std::vector<double>{0.02, 0.05, 0.1});
  const int n_min = static_cast<int>(positive(cfg, "n_min", dv ? 1 : 4));
  const int n_max = static_cast<int>(positive(cfg, "n_max", dv ? 30 : 12));
  const int n0 = static_cast<int>(positive(cfg, "n0", 1));
  if (n_max < n_min) throw ConfigError("n_max must be >= n_min");
  holes::CensusOptions co;
  co.samples = static_cast<std::size_t>(positive(cfg, "census_samples", 200000));
  co.max_kept = static_cast<std::size_t>(positive(cfg, "max_kept", 1000000));
  co.cover_level = static_cast<int>(positive(cfg, "cover_level", 7));
  co.seed = seed_of(cfg);
  co.jobs = opts.jobs;

  std::string csv = config_header(cfg);
  std::vector<holes::A2Row> all;
  std::vector<Series> series;
  bool any_fail = false, any_inconclusive = false;
  for (double mu : grid) {
    const families::FamilySpec spec = family_spec(cfg, mu);
    csv += "# derived mu=" + num(mu) + ": " + derived_constants(spec).dump() + "\n";
    const auto map = families::make_map(spec);
    const double c0 = families::threshold_constant(spec);
    if (!(c0 > 0.0)) throw ConfigError("family has no hole at mu = " + num(mu));
    const auto rows = holes::a2_rows(*map, c0, n_min, n_max, n0, co);
    Series meas{"Leb(B_n) mu=" + num(mu), {}, {}, {}, {}, false};
    Series delta{"delta mu=" + num(mu), {}, {}, {}, {}, true};
    Series inc{"inconclusive mu=" + num(mu), {}, {}, {}, {}, false};
    for (const auto& r : rows) {
      any_fail |= r.status == holes::A2Status::fail;
      any_inconclusive |= r.status == holes::A2Status::inconclusive;
      auto& target = r.status == holes::A2Status::inconclusive ? inc : meas;
      target.x.push_back(r.n);
      target.y.push_back(r.vol_hi);
      delta.x.push_back(r.n);
      delta.y.push_back(r.delta);
      all.push_back(r);
    }
    series.push_back(meas);
    series.push_back(delta);
    if (!inc.x.empty()) series.push_back(inc);
    if (!opts.quiet) std::fprintf(stderr, "a2 %s mu=%s done\n", family.c_str(), num(mu).c_str());
  }
  std::ostringstream body;
  holes::write_a2_csv(body, all);
  write_text(opts.out, "a2_report.csv", csv + body.str(), res);
  PlotSpec ps;
  ps.title = family + ": bad-set volume upper bound vs delta(n)";
  ps.xlabel = "n";
  ps.ylabel = "volume";
  ps.logy = true;
  write_text(opts.out, "a2_plot.svg", render_svg(ps, series), res);
  std::printf("a2: %s\n", any_fail ? "FAIL" : (any_inconclusive ? "PASS with inconclusive rows" : "PASS"));
  res.exit_code = any_fail ? kExitViolation : kExitOk;
  return res;
}

// ---------------------------------------------------------------------------

CommandResult cmd_induced(const Config& cfg, const RunOptions& opts) {
  CommandResult res;
  const std::string family = cfg.get_string("family", "hopf2d");
  if (!families::has_symbolic_map(family)) throw ConfigError("induced needs a family with branch structure");
  const families::FamilySpec spec = family_spec(cfg, cfg.get_double("mu", 0.1));
  const auto map = families::make_map(spec);
  const double mu_f = map->hole_volume();
  const double param = map->delta_parameter();
  int n = 1;
  if (cfg.has("n"))
    n = static_cast<int>(positive(cfg, "n", 1));
  else if (param > 0.0 && param < 1.0 && mu_f > 0.0)
    n = induced::choose_n0(param, mu_f);
  if (n < 1) throw ConfigError("no n with delta(n, mu) < mu_f below the search limit");
  const double threshold = cfg.get_double("threshold", families::threshold_constant(spec) * mu_f);
  if (threshold < 0.0) throw ConfigError("threshold must be >= 0");

  holes::CensusOptions co;
  co.samples = static_cast<std::size_t>(positive(cfg, "census_samples", 200000));
  co.max_kept = static_cast<std::size_t>(positive(cfg, "max_kept", 1000000));
  co.outer_covers = false;
  co.seed = seed_of(cfg);
  co.jobs = opts.jobs;
  const auto F = induced::InducedExpander::build(*map, n, threshold, co);
  const auto e = induced::verify_expansion(F, static_cast<std::size_t>(positive(cfg, "verify_samples", 10000)),
                                           seed_of(cfg) + 1, opts.jobs);
  const auto h = induced::induced_hole_volume(F, static_cast<std::size_t>(positive(cfg, "hole_samples", 20000, 1000)),
                                              seed_of(cfg) + 2);

  json j = induced::to_json(e, h);
  j["config_hash"] = config_hash(cfg);
  j["config"] = config_json(cfg);
  j["family"] = family;
  j["derived"] = derived_constants(spec);
  j["degenerate"] = F.degenerate();
  if (F.degenerate()) j["warning"] = "empty domain: every sample lies in the hole of F_n";
  j["truncated"] = F.census().truncated();
  auto sizes = json::array();
  for (const auto& s : F.s_sets().sets) sizes.push_back(s.size());
  j["s_set_sizes"] = sizes;
  j["s_sets_disjoint"] = F.s_sets().disjoint;
  j["return_time_histogram"] = F.return_time_histogram();
  write_text(opts.out, "induced_report.json", j.dump(2) + "\n", res);

  const bool ok = F.degenerate() || (e.pass && h.pass);
  std::printf("induced: %s (n=%d, min margin %s, hole %s <= bound %s)%s\n", ok ? "PASS" : "FAIL", n,
              num(e.min_margin).c_str(), num(h.measured.value).c_str(), num(h.bound).c_str(),
              F.degenerate() ? " [degenerate]" : "");
  res.exit_code = ok ? kExitOk : kExitViolation;
  return res;
}

// ---------------------------------------------------------------------------

namespace {

CommandResult dispatch(const std::string& name, const Config& cfg, const RunOptions& opts) {
  if (name == "dim") return cmd_dim(cfg, opts);
  if (name == "bounds") return cmd_bounds(cfg, opts);
  if (name == "a2") return cmd_a2(cfg, opts);
  if (name == "induced") return cmd_induced(cfg, opts);
  throw ConfigError("unknown command '" + name + "'");
}

int run_single(const std::string& name, const Config& cfg, const RunOptions& opts) {
  const std::string key = git_blob_hash(std::string(kCacheVersion) + "\n" + name + "\n" + cfg.resolved());
  const ResultCache cache(opts.cache_dir.empty() ? default_cache_dir() : opts.cache_dir);
  if (opts.cache) {
    if (const auto code = cache.restore(name, key, opts.out)) {
      if (!opts.quiet) std::fprintf(stderr, "%s: cache hit %s\n", name.c_str(), key.c_str());
      return *code;
    }
  }
  const auto t0 = std::chrono::steady_clock::now();
  const CommandResult r = dispatch(name, cfg, opts);
  if (opts.cache) cache.store(name, key, opts.out, r.files, r.exit_code);
  if (!opts.quiet) {
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::fprintf(stderr, "%s: runtime %.1fs\n", name.c_str(), dt);
  }
  return r.exit_code;
}

}  // namespace

int run_command(const std::string& name, Config cfg, const RunOptions& opts) {
  try {
    if (opts.seed) cfg.set("seed", std::to_string(*opts.seed));
    if (!cfg.has("seed")) cfg.set("seed", "1");
    if (name != "sweep-all") return run_single(name, cfg, opts);
    int code = kExitOk;
    for (const std::string sub : {"dim", "bounds", "a2", "induced"}) {
      if ((sub == "a2" || sub == "induced") && !families::has_symbolic_map(cfg.get_string("family", "hopf2d")))
        continue;
      RunOptions o = opts;
      o.out = opts.out / sub;
      code = std::max(code, run_single(sub, cfg, o));
    }
    return code;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  }
}

}  // namespace repeller::lab
