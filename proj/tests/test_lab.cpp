#include <cmath>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "lab/cache.hpp"
#include "lab/commands.hpp"
#include "lab/config.hpp"
#include "lab/svg.hpp"

using namespace repeller::lab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("repeller_lab_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Config, ParsesCommentsAndOverrides) {
  const auto c = Config::parse("# comment\nfamily = tripling  # trailing\nseed = 4\nseed = 5\n");
  EXPECT_EQ(c.get_string("family", ""), "tripling");
  EXPECT_EQ(c.get_int("seed", 0), 5);
  EXPECT_EQ(c.resolved(), "family = tripling\nseed = 5\n");
}

TEST(Config, RejectsUnknownKeysAndBadNumbers) {
  EXPECT_THROW(Config::parse("colour = red\n"), ConfigError);
  EXPECT_THROW(Config::parse("seed = four\n").get_int("seed", 0), ConfigError);
  EXPECT_THROW(Config::parse("no equals sign\n"), ConfigError);
}

TEST(Config, IncludesAreRelative) {
  const auto dir = scratch("include");
  std::ofstream(dir / "base.cfg") << "family = hopf2d\nmu = 0.1\n";
  std::ofstream(dir / "top.cfg") << "include = base.cfg\nmu = 0.05\n";
  const auto c = Config::load(dir / "top.cfg");
  EXPECT_EQ(c.get_string("family", ""), "hopf2d");
  EXPECT_DOUBLE_EQ(c.get_double("mu", 0), 0.05);
}

TEST(Config, MuGrids) {
  EXPECT_EQ(mu_grid(Config::parse("mu_grid = 0.1, 0.02, 0.05\n"), {}), (std::vector<double>{0.02, 0.05, 0.1}));
  EXPECT_TRUE(mu_grid(Config::parse("mu_grid =\n"), {0.1}).empty());
  const auto g = mu_grid(Config::parse("mu_start = 0.001\nmu_stop = 0.1\nmu_count = 3\nmu_spacing = log\n"), {});
  ASSERT_EQ(g.size(), 3U);
  EXPECT_NEAR(g[1], 0.01, 1e-12);
  EXPECT_EQ(mu_grid(Config::parse(""), {0.3}), std::vector<double>{0.3});
  EXPECT_THROW(mu_grid(Config::parse("mu_grid = 2\n"), {}), ConfigError);
}

TEST(Cache, GitBlobHash) {
  EXPECT_EQ(git_blob_hash(""), "e69de29bb2d1d6434b8b29ae775ad8c2e48c5391");
  EXPECT_EQ(git_blob_hash("hello world\n"), "3b18e512dba79e4c8300dd08aeb37f8e728b8dad");
}

TEST(Cache, StoreRestoreAndTamper) {
  const auto dir = scratch("cache");
  const ResultCache cache(dir / "store");
  std::ofstream(dir / "a.csv") << "x,y\n1,2\n";
  cache.store("dim", "k1", dir, {"a.csv"}, 1);
  const auto out = dir / "out";
  const auto code = cache.restore("dim", "k1", out);
  ASSERT_TRUE(code.has_value());
  EXPECT_EQ(*code, 1);
  EXPECT_EQ(slurp(out / "a.csv"), "x,y\n1,2\n");
  EXPECT_FALSE(cache.restore("dim", "k2", out).has_value());
  std::ofstream(dir / "store" / "dim" / "k1" / "a.csv") << "tampered";
  EXPECT_FALSE(cache.restore("dim", "k1", dir / "out2").has_value());
}

TEST(Svg, DeterministicAndSkipsNonFinite) {
  PlotSpec spec;
  spec.title = "t";
  Series s{"a", {1, 2, 3}, {1, std::nan(""), 3}, {}, {}, false};
  const auto one = render_svg(spec, {s});
  EXPECT_EQ(one, render_svg(spec, {s}));
  EXPECT_EQ(one.rfind("<svg", 0), 0U);
  EXPECT_NE(one.find("</svg>"), std::string::npos);
  EXPECT_EQ(one.find("nan"), std::string::npos);
}

TEST(Commands, EmptyGridGivesHeaderOnlyCsv) {
  const auto dir = scratch("empty_grid");
  RunOptions o;
  o.out = dir;
  o.cache = false;
  o.quiet = true;
  EXPECT_EQ(run_command("dim", Config::parse("family = hopf2d\nmu_grid =\n"), o), kExitOk);
  const auto csv = slurp(dir / "dim.csv");
  EXPECT_EQ(csv.substr(csv.find("mu,mu_f")), "mu,mu_f,rho_inv,dim,ci,residual,flat_warning,trap,status\n");
}

TEST(Commands, EmptyBoundsGridExitsZero) {
  const auto dir = scratch("empty_bounds");
  RunOptions o;
  o.out = dir;
  o.cache = false;
  o.quiet = true;
  const auto cfg = Config::parse(
      "patterns_n_max = 0\nstirling_l_max = 0\nentropy_l_max = 0\nprobe_l_max = 0\nlemma_l_max = 0\n"
      "delta_n_max = 0\nlt_l = 0\nrow_sum_m_max = -1\nchain_n = 0\n");
  EXPECT_EQ(run_command("bounds", cfg, o), kExitOk);
  EXPECT_TRUE(fs::exists(dir / "bounds_summary.json"));
}

TEST(Commands, ConfigErrorsExitTwo) {
  RunOptions o;
  o.out = scratch("config_error");
  o.cache = false;
  o.quiet = true;
  EXPECT_EQ(run_command("dim", Config::parse("family = nope\n"), o), kExitConfig);
  EXPECT_EQ(run_command("dim", Config::parse("family = hopf3d\nlevel_max = 8\n"), o), kExitConfig);
  EXPECT_EQ(run_command("frobnicate", Config::parse(""), o), kExitConfig);
}

TEST(Commands, NoHoleRowIsFlagged) {
  const auto dir = scratch("no_hole");
  RunOptions o;
  o.out = dir;
  o.cache = false;
  o.quiet = true;
  const auto cfg = Config::parse("family = hopf2d\nmu_grid = -0.01\nlevel_min = 2\nlevel_max = 6\nsamples_per_box = 8\n");
  EXPECT_EQ(run_command("dim", cfg, o), kExitOk);
  const auto csv = slurp(dir / "dim.csv");
  EXPECT_NE(csv.find("no hole"), std::string::npos);
  EXPECT_NE(csv.find(",2,"), std::string::npos);
}

TEST(Commands, DegenerateInducedExitsZero) {
  const auto dir = scratch("degenerate");
  RunOptions o;
  o.out = dir;
  o.cache = false;
  o.quiet = true;
  const auto cfg = Config::parse("family = tripling\nn = 3\nthreshold = 10\ncensus_samples = 5000\n");
  EXPECT_EQ(run_command("induced", cfg, o), kExitOk);
  EXPECT_NE(slurp(dir / "induced_report.json").find("\"degenerate\": true"), std::string::npos);
}
