#include <cmath>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "repeller/families/diaz_viana.hpp"
#include "repeller/families/hopf2d.hpp"
#include "repeller/families/registry.hpp"
#include "repeller/families/toys.hpp"
#include "repeller/holes/a2_report.hpp"
#include "repeller/holes/census.hpp"
#include "repeller/holes/cylinder.hpp"
#include "repeller/holes/expansion.hpp"

using namespace repeller::holes;
using namespace repeller::families;
using repeller::geometry::TorusPoint;

namespace {

HopfModel2D hopf(double mu) {
  Hopf2DParams p;
  p.mu = mu;
  return HopfModel2D(p);
}

CensusOptions small(std::size_t samples = 40000) {
  CensusOptions o;
  o.samples = samples;
  o.cover_level = 6;
  return o;
}

}  // namespace

TEST(Cylinder, WordValidation) {
  EXPECT_THROW(CylinderWord({0, 2}, 2), std::invalid_argument);
  const CylinderWord w({1, 0, 1}, 2);
  EXPECT_EQ(w.prefix(2), CylinderWord({1, 0}, 2));
  EXPECT_LT(CylinderWord({0, 1}, 2), CylinderWord({1, 0}, 2));
}

TEST(Cylinder, TriplingWordIsAffinePullback) {
  const TriplingToy f;
  const CylinderWord w({0, 1}, 2);
  // x in [0,1/3] and 3x in [2/3,1]: the interval [2/9, 1/3].
  for (int level : {3, 5}) {
    const auto cover = pullback_cover(f, w, 3, level);
    const double eps = std::pow(3.0, -level);
    EXPECT_NEAR(cover.occupied_volume(), 1.0 / 9.0, 2.0 * eps + 1e-12);
    for (int i = 0; i < 1000; ++i) {
      const double x = 2.0 / 9.0 + (i + 0.5) / 1000.0 / 9.0;
      EXPECT_TRUE(cover.test(cover.index_of(TorusPoint{x}))) << x;
    }
  }
  RefineOptions o;
  o.base = 3;
  o.level = 5;
  const auto g = refine_cylinder(f, w, o);
  ASSERT_FALSE(g.empty);
  for (const auto& x : g.witnesses) {
    EXPECT_GE(x[0], 2.0 / 9.0);
    EXPECT_LE(x[0], 1.0 / 3.0);
  }
  EXPECT_LE(g.volume_lo, 1.0 / 9.0 + 1e-12);
  EXPECT_GE(g.volume_hi, 1.0 / 9.0 - 1e-12);
}

TEST(Cylinder, LengthOneIsTheBranchDomain) {
  const TriplingToy f;
  const auto cover = pullback_cover(f, CylinderWord({1}, 2), 3, 4);
  EXPECT_NEAR(cover.occupied_volume(), 1.0 / 3.0, 1e-12);
  EXPECT_TRUE(cover.test(cover.index_of(TorusPoint{0.7})));
  EXPECT_FALSE(cover.test(cover.index_of(TorusPoint{0.5})));
}

TEST(Cylinder, HopfRevisitingDegenerateBranch) {
  const auto m = hopf(0.05);
  const auto g = refine_cylinder(m, CylinderWord({0, 0, 0, 0, 0}, 10));
  ASSERT_FALSE(g.empty);
  EXPECT_GT(g.witnesses.size(), 0U);
  EXPECT_LT(g.volume_hi, m.branch_volume(0));
  for (const auto& x : g.witnesses) EXPECT_TRUE(in_cylinder(m, x, g.word));
}

TEST(Expansion, TriplingIsLogThree) {
  const TriplingToy f;
  const auto p = phi_profile(f, CylinderWord({0, 1, 1, 0}, 2));
  ASSERT_EQ(p.phi.size(), 4U);
  for (double v : p.phi) EXPECT_NEAR(v, std::log(3.0), 1e-12);
  EXPECT_TRUE(p.product_check);
}

TEST(Expansion, LinearTorusIsHalfLogTen) {
  const LinearTorus2D f;
  const auto p = phi_profile(f, CylinderWord({3, 7, 0}, 10));
  for (double v : p.raw_phi) EXPECT_NEAR(v, 0.5 * std::log(10.0), 1e-9);
  EXPECT_NEAR(log_least_expansion(f, TorusPoint{0.2, 0.3}, 4), 2.0 * std::log(10.0), 1e-9);
}

TEST(Expansion, HopfOrbitNearCircleLosesExpansion) {
  const auto m = hopf(0.05);
  const auto p = phi_profile(m, CylinderWord({0, 0, 0, 0, 0}, 10));
  ASSERT_FALSE(p.empty);
  EXPECT_LT(p.raw_phi.back(), 0.5 * std::log(10.0));
  EXPECT_LT(p.raw_phi.back(), 0.05);
  EXPECT_TRUE(p.product_check);
}

TEST(Census, TriplingHasNoBadWords) {
  const TriplingToy f;
  const double thr = threshold_constant({"tripling"}) * f.hole_volume();
  const auto c = run_census(f, 6, thr, small());
  EXPECT_EQ(c.kept_total(), 0U);
  const auto bv = bad_volume(c, 6);
  EXPECT_TRUE(bv.exact_zero);
  EXPECT_EQ(bv.vol_hi, 0.0);
}

TEST(Census, CountsAreConsistent) {
  const auto m = hopf(0.1);
  const auto c = run_census(m, 6, m.c0() * m.hole_volume(), small());
  for (const auto& lv : c.levels()) EXPECT_EQ(lv.kept + lv.pruned, lv.visited) << lv.depth;
  EXPECT_EQ(c.kept_total() + c.pruned_total(), c.visited_total());
  EXPECT_FALSE(c.truncated());
  for (int k = 1; k <= 6; ++k) {
    const auto bv = bad_volume(c, k);
    EXPECT_LE(bv.vol_lo, bv.estimate);
    EXPECT_GE(bv.vol_hi, bv.estimate);
  }
}

TEST(Census, DiazVianaBadVolumeIsExactlyZero) {
  FamilySpec s;
  s.family = "diaz-viana";
  s.mu = 0.01;
  const auto f = make_map(s);
  const auto c = run_census(*f, 30, threshold_constant(s) * f->hole_volume(), small(20000));
  for (int n = 1; n <= 30; ++n) {
    const auto bv = bad_volume(c, n);
    EXPECT_TRUE(bv.exact_zero) << n;
    EXPECT_EQ(bv.vol_hi, 0.0) << n;
  }
}

TEST(Census, HopfBadVolumeAtTenBelowDelta) {
  const auto m = hopf(0.1);
  const auto bv = bad_volume(m, 10, m.c0() * m.hole_volume(), small(100000));
  EXPECT_FALSE(bv.truncated);
  EXPECT_LE(bv.vol_hi, 0.84557);
}

TEST(Partition, TriplingFirstLevelOnly) {
  const TriplingToy f;
  const auto c = run_census(f, 4, 0.1, small());
  const auto p = sn_partition(c);
  ASSERT_EQ(p.sets.size(), 4U);
  EXPECT_EQ(p.sets[0].size(), 2U);
  for (std::size_t k = 1; k < p.sets.size(); ++k) EXPECT_TRUE(p.sets[k].empty());
  EXPECT_TRUE(p.disjoint);
}

TEST(Partition, DiazVianaHasOnlyFirstLevel) {
  FamilySpec s;
  s.family = "diaz-viana";
  s.mu = 0.01;
  const auto f = make_map(s);
  const auto p = sn_partition(run_census(*f, 8, threshold_constant(s) * f->hole_volume(), small(20000)));
  EXPECT_EQ(p.sets[0].size(), 2U);
  for (std::size_t k = 1; k < p.sets.size(); ++k) EXPECT_TRUE(p.sets[k].empty());
}

TEST(Partition, HopfLevelsNonemptyAndDisjoint) {
  const auto m = hopf(0.1);
  const auto p = sn_partition(run_census(m, 6, m.c0() * m.hole_volume(), small()));
  ASSERT_EQ(p.sets.size(), 6U);
  std::set<std::vector<int>> seen;
  for (const auto& level : p.sets) {
    EXPECT_FALSE(level.empty());
    for (const auto& w : level) {
      // no word of S_k extends a word of an earlier S_j
      for (std::size_t j = 1; j < w.size(); ++j) EXPECT_FALSE(seen.count(w.prefix(j).symbols()));
      seen.insert(w.symbols());
    }
  }
  EXPECT_TRUE(p.disjoint);
}

TEST(A2, ToyWithoutBadWordsPasses) {
  const TriplingToy f;
  const auto rows = a2_rows(f, 1.0 / 256.0, 1, 5, 1, small());
  ASSERT_EQ(rows.size(), 5U);
  for (const auto& r : rows) {
    EXPECT_EQ(r.vol_hi, 0.0);
    EXPECT_EQ(r.status, A2Status::pass);
  }
  EXPECT_TRUE(all_pass(rows));
}

TEST(A2, RowsBelowN0AreOutOfContract) {
  const auto m = hopf(0.1);
  const auto rows = a2_rows(m, m.c0(), 4, 6, 6, small());
  EXPECT_EQ(rows[0].status, A2Status::out_of_contract);
  EXPECT_EQ(rows[1].status, A2Status::out_of_contract);
  EXPECT_EQ(rows[2].status, A2Status::pass);
  std::ostringstream os;
  write_a2_csv(os, rows);
  EXPECT_EQ(os.str().substr(0, a2_csv_header().size()), a2_csv_header());
  EXPECT_NE(os.str().find("out_of_contract"), std::string::npos);
}

TEST(A2, DeltaColumnAtTen) {
  const auto m = hopf(0.1);
  const auto rows = a2_rows(m, m.c0(), 10, 10, 1, small());
  EXPECT_NEAR(rows[0].delta, 0.84557, 1e-5);
}
