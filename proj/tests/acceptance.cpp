// Acceptance suite: one PASS/FAIL line per criterion. With no argument every
// criterion runs; `repeller-acceptance 4` runs one. Exit status is nonzero if
// any selected criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "lab/commands.hpp"
#include "lab/config.hpp"
#include "repeller/bounds/inequalities.hpp"
#include "repeller/bounds/patterns.hpp"
#include "repeller/families/escape.hpp"
#include "repeller/families/hopf2d.hpp"
#include "repeller/families/phi_profile.hpp"
#include "repeller/families/registry.hpp"
#include "repeller/geometry/box_dimension.hpp"
#include "repeller/holes/a2_report.hpp"
#include "repeller/holes/census.hpp"
#include "repeller/induced/induced_expander.hpp"

namespace fs = std::filesystem;
using namespace repeller;

namespace {

// Pinned tolerances.
constexpr double kCantorTol = 0.02;
constexpr double kCantorSeconds = 10.0;
constexpr double kFull2DTol = 0.03;
constexpr double kFull3DTol = 0.07;
constexpr double k3DSeconds = 600.0;
constexpr double kTrend2DFloor = 1.90;
constexpr double kTrend3DFloor = 2.75;
constexpr double kTrend3DTol = 0.1;
constexpr double kCombinatorialSeconds = 60.0;
constexpr double kScalingSlope = 0.5;
constexpr double kScalingTol = 0.05;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

struct DimSetup {
  std::string family;
  double mu = 0.0;
  int base = 2, level_min = 3, level_max = 10;
  std::size_t horizon = 100, spb = 64;
};

geometry::DimensionEstimate survivor_dimension(const DimSetup& s) {
  families::FamilySpec spec;
  spec.family = s.family;
  spec.mu = s.mu;
  const auto model = families::make_model(spec);
  geometry::EscapeCoverOptions eo;
  eo.base = s.base;
  eo.level = s.level_max;
  eo.samples_per_box = s.spb;
  eo.seed = 1;
  const auto cover = geometry::escape_cover(model->dimension(), families::survival_test(*model, s.horizon), eo);
  std::vector<geometry::ScaleCount> scales;
  for (const auto& [eps, count] : geometry::ladder_counts(cover.cover, s.level_min)) scales.push_back({eps, count});
  return geometry::box_dimension(scales, model->dimension());
}

DimSetup hopf2d(double mu) { return {"hopf2d", mu, 2, 3, 10, 100, 64}; }
DimSetup hopf3d(double mu) { return {"hopf3d", mu, 2, 3, 7, 100, 8}; }

Outcome cantor() {
  const auto t0 = Clock::now();
  const auto est = survivor_dimension({"tripling", 0.0, 3, 1, 8, 12, 64});
  const double dt = seconds_since(t0);
  const double target = std::log(2.0) / std::log(3.0);
  return {std::abs(est.slope - target) <= kCantorTol && dt < kCantorSeconds,
          fmt("dim %.4f vs %.4f (tol %.2f), %.1fs (limit %.0fs)", est.slope, target, kCantorTol, dt,
              kCantorSeconds)};
}

Outcome full_measure() {
  const auto d2 = survivor_dimension(hopf2d(0.0));
  const auto t0 = Clock::now();
  const auto d3 = survivor_dimension(hopf3d(0.0));
  const double dt = seconds_since(t0);
  const bool ok = std::abs(d2.slope - 2.0) <= kFull2DTol && std::abs(d3.slope - 3.0) <= kFull3DTol && dt < k3DSeconds;
  return {ok, fmt("2D %.4f (tol %.2f), 3D coarse %.4f (tol %.2f), 3D %.1fs (limit %.0fs)", d2.slope, kFull2DTol,
                  d3.slope, kFull3DTol, dt, k3DSeconds)};
}

Outcome trend() {
  const std::vector<double> grid{0.1, 0.05, 0.02, 0.01, 0.005};
  std::vector<geometry::DimensionEstimate> est;
  std::string detail = "2D";
  for (double mu : grid) {
    est.push_back(survivor_dimension(hopf2d(mu)));
    detail += fmt(" %g:%.4f", mu, est.back().slope);
  }
  bool ok = true;
  for (std::size_t i = 0; i + 1 < est.size(); ++i)
    ok = ok && est[i + 1].slope + est[i + 1].ci_half_width + est[i].ci_half_width >= est[i].slope;
  ok = ok && est.back().slope >= kTrend2DFloor;
  const auto a = survivor_dimension(hopf3d(0.1));
  const auto b = survivor_dimension(hopf3d(0.01));
  ok = ok && b.slope + kTrend3DTol >= a.slope && b.slope >= kTrend3DFloor;
  detail += fmt("; 3D coarse 0.1:%.4f 0.01:%.4f (floor %.2f, tol %.1f)", a.slope, b.slope, kTrend3DFloor, kTrend3DTol);
  return {ok, detail};
}

Outcome a2() {
  holes::CensusOptions co;
  co.samples = 200000;
  std::size_t rows = 0, fails = 0;
  double worst = 0.0;
  for (double mu : {0.02, 0.05, 0.1}) {
    families::FamilySpec spec;
    spec.mu = mu;
    const auto map = families::make_map(spec);
    for (const auto& r : holes::a2_rows(*map, families::threshold_constant(spec), 4, 12, 1, co)) {
      ++rows;
      if (r.status != holes::A2Status::pass) ++fails;
      worst = std::max(worst, r.vol_hi / r.delta);
    }
  }
  std::size_t dv_nonzero = 0;
  for (double t : {0.001, 0.01, 0.05}) {
    families::FamilySpec spec;
    spec.family = "diaz-viana";
    spec.mu = t;
    const auto map = families::make_map(spec);
    const auto c = holes::run_census(*map, 30, families::threshold_constant(spec) * map->hole_volume(), co);
    for (int n = 1; n <= 30; ++n)
      if (!holes::bad_volume(c, n).exact_zero) ++dv_nonzero;
  }
  return {fails == 0 && dv_nonzero == 0,
          fmt("2D: %zu rows, %zu not passing, max vol_hi/delta %.4f; Diaz-Viana: %zu nonzero volumes over n<=30", rows,
              fails, worst, dv_nonzero)};
}

Outcome induced_expander() {
  families::FamilySpec spec;
  spec.mu = 0.1;
  const auto map = families::make_map(spec);
  const double mu_f = map->hole_volume();
  const int n0 = induced::choose_n0(map->delta_parameter(), mu_f);
  holes::CensusOptions co;
  co.outer_covers = false;
  const auto F = induced::InducedExpander::build(*map, n0, families::threshold_constant(spec) * mu_f, co);
  const auto e = induced::verify_expansion(F, 10000, 2);
  const auto h = induced::induced_hole_volume(F, 20000, 3);
  return {!F.degenerate() && e.pass && h.pass,
          fmt("n0=%d, %zu domain samples, min margin %.4f; hole %.3g (CI upper %.3g) vs log bound %.1f", n0,
              e.domain_samples, e.min_margin, h.measured.value, h.measured.upper(), h.log_bound)};
}

Outcome combinatorial() {
  const auto t0 = Clock::now();
  std::size_t cells = 0;
  std::size_t fail_patterns = 0, fail_stirling = 0, fail_prefactor = 0, fail_entropy = 0, fail_lemma = 0;
  for (int m : {1, 2, 9})
    for (int n = 2; n <= 20; ++n)
      for (int l = 1; l < n; ++l)
        for (int t = 1; t <= std::min(l, n - l); ++t, ++cells)
          if (!bounds::count_patterns(n, l, t, m).pass) ++fail_patterns;
  for (int l = 3; l <= 1000; ++l) {
    const auto sw = bounds::stirling_sweep(l);
    cells += sw.cells;
    fail_stirling += sw.failures;
    fail_prefactor += sw.prefactor_failures;
  }
  const double k0 = bounds::kappa0(1.0);
  for (double kappa : {k0, 0.3, 0.2, 0.1, 0.05, 0.01})
    for (int l = 1; l <= 1000; ++l) {
      const auto sw = bounds::entropy_sweep(l, kappa, 1.0);
      cells += sw.cells;
      fail_entropy += sw.failures;
    }
  std::string first;
  for (double mu : {0.05, 0.1}) {
    const double slope = mu / (-4.0 * std::log(mu));
    bool seen = false;
    for (int l = 1; l <= 2000; ++l)
      for (int t = 1; t <= static_cast<int>(std::floor(slope * l)); ++t, ++cells)
        if (!bounds::lemma_cell(l, t, mu).pass) {
          ++fail_lemma;
          if (!seen) first += fmt(" lemma first fails at mu=%g l=%d t=%d;", mu, l, t);
          seen = true;
        }
  }
  const double dt = seconds_since(t0);
  const std::size_t failures = fail_patterns + fail_stirling + fail_prefactor + fail_entropy + fail_lemma;
  return {failures == 0 && dt < kCombinatorialSeconds,
          fmt("%zu cells, failures: patterns %zu, stirling %zu, prefactor %zu, entropy %zu, lemma %zu;%s %.1fs "
              "(limit %.0fs)",
              cells, fail_patterns, fail_stirling, fail_prefactor, fail_entropy, fail_lemma, first.c_str(), dt,
              kCombinatorialSeconds)};
}

Outcome hole_scaling() {
  std::vector<double> x, y;
  for (int i = 0; i <= 16; ++i) {
    families::Hopf2DParams p;
    p.mu = std::pow(10.0, -4.0 + 0.125 * i);
    x.push_back(std::log(p.mu));
    y.push_back(std::log(families::HopfModel2D(p).rho_inv()));
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sxy += (x[i] - mx) * (y[i] - my), sxx += (x[i] - mx) * (x[i] - mx);
  const double slope = sxy / sxx;
  return {std::abs(slope - kScalingSlope) <= kScalingTol,
          fmt("slope %.4f vs %.3f (tol %.2f), 17 points in [1e-4, 1e-2]", slope, kScalingSlope, kScalingTol)};
}

Outcome phi_conditions() {
  bool ok = true;
  std::string detail;
  const families::Hopf2DParams d;
  for (double mu : {0.0, 0.05, 0.2}) {
    const auto phi = families::PhiProfile::build(mu, families::HopfModel2D::sigma(), d.delta0, d.delta1, d.sigma1);
    const auto c = phi.verify(2048);
    ok = ok && c.all() && c.points == 2048;
    detail += fmt("mu=%g %s; ", mu, c.all() ? "C1-C4 hold" : c.first_failure.c_str());
  }
  bool rejected = false;
  try {
    families::PhiProfile::build(0.05, families::HopfModel2D::sigma(), d.delta0, d.delta1, 10.0);
  } catch (const families::PhiConditionError&) {
    rejected = true;
  }
  ok = ok && rejected;
  detail += rejected ? "violating profile rejected" : "violating profile accepted";
  return {ok, detail};
}

Outcome reproducibility() {
  const fs::path root = fs::temp_directory_path() / "repeller_acceptance_repro";
  fs::remove_all(root);
  std::size_t files = 0, differing = 0;
  for (const char* text : {"family = tripling\nseed = 7\n",
                           "family = hopf2d\nmu_grid = 0.05, 0.1\nlevel_max = 8\nsamples_per_box = 16\nseed = 7\n"}) {
    const auto cfg = lab::Config::parse(text);
    std::vector<fs::path> dirs{root / "a", root / "b"};
    for (const auto& dir : dirs) {
      fs::remove_all(dir);
      lab::RunOptions o;
      o.out = dir;
      o.cache = false;
      o.quiet = true;
      if (lab::run_command("dim", cfg, o) != lab::kExitOk) return {false, "cmd_dim failed"};
    }
    for (const auto& entry : fs::directory_iterator(dirs[0])) {
      ++files;
      auto read = [](const fs::path& p) {
        std::ifstream in(p, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
      };
      if (read(entry.path()) != read(dirs[1] / entry.path().filename())) ++differing;
    }
  }
  fs::remove_all(root);
  return {files > 0 && differing == 0, fmt("%zu output files compared, %zu differ", files, differing)};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {"cantor oracle", cantor},
      {"full-measure sanity", full_measure},
      {"dimension trend", trend},
      {"bad-volume bound", a2},
      {"induced expander", induced_expander},
      {"combinatorial suite", combinatorial},
      {"hole scaling", hole_scaling},
      {"profile conditions", phi_conditions},
      {"reproducibility", reproducibility},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k < 1 || k > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "usage: %s [criterion 1..%zu]...\n", argv[0], criteria.size());
      return 2;
    }
    selected.push_back(k);
  }
  if (selected.empty())
    for (int k = 1; k <= static_cast<int>(criteria.size()); ++k) selected.push_back(k);

  int failed = 0;
  for (int k : selected) {
    const auto& c = criteria[static_cast<std::size_t>(k - 1)];
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", k, c.name, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
