#include <cmath>

#include <gtest/gtest.h>

#include "repeller/families/hopf2d.hpp"
#include "repeller/families/registry.hpp"
#include "repeller/families/toys.hpp"
#include "repeller/induced/induced_expander.hpp"

using namespace repeller::induced;
using namespace repeller::families;
using repeller::holes::CensusOptions;

namespace {

CensusOptions opts(std::size_t samples = 40000) {
  CensusOptions o;
  o.samples = samples;
  o.outer_covers = false;
  return o;
}

}  // namespace

TEST(Induced, TriplingReturnsAtOnce) {
  const TriplingToy f;
  const auto F = InducedExpander::build(f, 1, 0.1, opts());
  EXPECT_FALSE(F.degenerate());
  for (double x : {0.05, 0.2, 0.7, 0.99}) {
    const auto ev = F.evaluate(TorusPoint{x});
    EXPECT_FALSE(ev.in_hole);
    EXPECT_EQ(ev.return_time, 1);
    EXPECT_NEAR(ev.image[0], std::fmod(3.0 * x, 1.0), 1e-12);
  }
  EXPECT_TRUE(F.evaluate(TorusPoint{0.5}).in_hole);
}

TEST(Induced, TriplingMarginAndHole) {
  const TriplingToy f;
  const auto F = InducedExpander::build(f, 1, 0.1, opts());
  const auto e = verify_expansion(F, 10000, 3);
  EXPECT_TRUE(e.pass);
  EXPECT_NEAR(e.min_margin, std::log(3.0) - 0.1, 1e-12);
  const auto h = induced_hole_volume(F, 100000, 4);
  EXPECT_LE(h.measured.lower(), 1.0 / 3.0);
  EXPECT_GE(h.measured.upper(), 1.0 / 3.0);
  EXPECT_GE(h.bound, 1.0 / 3.0);
  EXPECT_TRUE(h.pass);
}

TEST(Induced, LinearTorusMargin) {
  const LinearTorus2D f;
  const auto F = InducedExpander::build(f, 1, 0.1, opts());
  const auto e = verify_expansion(F, 10000, 3);
  EXPECT_EQ(e.domain_samples, 10000U);
  EXPECT_NEAR(e.min_margin, 0.5 * std::log(10.0) - 0.1, 1e-9);
}

TEST(Induced, DiazVianaHoleIsTheBaseHole) {
  FamilySpec s;
  s.family = "diaz-viana";
  s.mu = 0.01;
  const auto f = make_map(s);
  const auto F = InducedExpander::build(*f, 8, threshold_constant(s) * f->hole_volume(), opts(20000));
  const auto hist = F.return_time_histogram();
  for (std::size_t j = 2; j < hist.size(); ++j) EXPECT_EQ(hist[j], 0U) << j;
  const auto h = induced_hole_volume(F, 200000, 5);
  EXPECT_LE(h.measured.lower(), f->hole_volume());
  EXPECT_GE(h.measured.upper(), f->hole_volume());
  EXPECT_GE(h.bound, f->hole_volume());
  EXPECT_TRUE(h.pass);
}

TEST(Induced, HopfMixedReturnTimes) {
  Hopf2DParams p;
  p.mu = 0.1;
  const HopfModel2D m(p);
  const auto F = InducedExpander::build(m, 6, m.c0() * m.hole_volume(), opts());
  const auto hist = F.return_time_histogram();
  ASSERT_EQ(hist.size(), 7U);
  EXPECT_GT(hist[1], 0U);
  EXPECT_GT(hist[3], 0U);
  const auto e = verify_expansion(F, 10000, 3);
  EXPECT_GE(e.domain_samples, 9000U);
  EXPECT_GT(e.min_margin, 0.0);
  const auto h = induced_hole_volume(F, 20000, 4);
  EXPECT_TRUE(h.pass);
  EXPECT_LE(h.measured.value, h.bound);
}

TEST(Induced, ThresholdAboveAllExpansionIsDegenerate) {
  const TriplingToy f;
  const auto F = InducedExpander::build(f, 3, 10.0, opts(5000));
  EXPECT_TRUE(F.degenerate());
  EXPECT_FALSE(verify_expansion(F, 1000, 1).pass);
}

TEST(Induced, ChooseN0) {
  EXPECT_EQ(choose_n0(0.1, 0.9), 1);
  const int n0 = choose_n0(0.1, 1e-3);
  EXPECT_GT(n0, 80);
}
