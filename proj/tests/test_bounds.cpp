#include <cmath>

#include <gtest/gtest.h>

#include "repeller/bounds/big_binomial.hpp"
#include "repeller/bounds/inequalities.hpp"
#include "repeller/bounds/patterns.hpp"
#include "repeller/bounds/volume_chain.hpp"
#include "repeller/families/hopf2d.hpp"
#include "repeller/families/toys.hpp"
#include "repeller/holes/census.hpp"

using namespace repeller::bounds;

TEST(BigBinomial, ExactValues) {
  EXPECT_EQ(binomial(10, 2), 45);
  EXPECT_EQ(binomial(100, 10), mpz_class("17310309456440"));
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_NEAR(log_binomial(100, 10), 30.482, 1e-3);
}

TEST(BigBinomial, DirectedExpComparisons) {
  EXPECT_TRUE(le_exp(mpz_class(2), std::log(2.0) + 1e-12));
  EXPECT_FALSE(le_exp(mpz_class(3), 1.0));
  EXPECT_TRUE(exp_le(1.0, mpz_class(3)));
  EXPECT_FALSE(exp_le(1.0, mpz_class(2)));
}

TEST(BigBinomial, RowSums) {
  for (unsigned long m = 0; m <= 64; ++m) EXPECT_TRUE(binomial_row_sums_to_power(m)) << m;
}

TEST(Patterns, FourSymbolWords) {
  const auto c = count_patterns(4, 2, 1, 2);
  EXPECT_EQ(c.exact, 4);
  EXPECT_EQ(c.bound, 9);
  EXPECT_TRUE(c.pass);
  EXPECT_EQ(enumerate_patterns(4, 2, 1, 2), 4);
}

TEST(Patterns, SixSymbolWords) {
  const auto c = count_patterns(6, 3, 2, 1);
  EXPECT_EQ(c.exact, 4);
  EXPECT_EQ(c.bound, 72);
  EXPECT_EQ(enumerate_patterns(6, 3, 2, 1), 4);
}

TEST(Patterns, FormulaMatchesEnumeration) {
  for (int m : {1, 2, 3})
    for (int n = 2; n <= 9; ++n)
      for (int l = 1; l < n; ++l)
        for (int t = 1; t <= std::min(l, n - l); ++t)
          EXPECT_EQ(count_patterns(n, l, t, m).exact, enumerate_patterns(n, l, t, m))
              << n << " " << l << " " << t << " " << m;
}

TEST(Patterns, AllInsideRejected) { EXPECT_THROW(count_patterns(3, 3, 3, 2), std::invalid_argument); }

TEST(Stirling, TenChooseTwo) {
  const auto c = stirling_binomial_bound(10, 2);
  EXPECT_TRUE(c.pass);
  EXPECT_NEAR(std::exp(c.log_exact), 45.0, 1e-9);
  EXPECT_NEAR(std::exp(c.log_bound), 149.01, 0.01);
  EXPECT_TRUE(c.prefactor_pass);
}

TEST(Stirling, HundredChooseTen) {
  const auto c = stirling_binomial_bound(100, 10);
  EXPECT_TRUE(c.pass);
  EXPECT_NEAR(c.log_exact, 30.482, 1e-3);
  EXPECT_NEAR(c.log_bound, 100 * std::log(100.0) - 10 * std::log(10.0) - 90 * std::log(90.0), 1e-9);
}

TEST(Stirling, HalfBoundaryRejected) { EXPECT_THROW(stirling_binomial_bound(2, 1), std::invalid_argument); }

TEST(Stirling, SweepAgreesWithCells) {
  const auto sw = stirling_sweep(40);
  EXPECT_EQ(sw.cells, 19U);
  EXPECT_EQ(sw.failures, 0U);
  EXPECT_EQ(sw.prefactor_failures, 0U);
  for (int t = 1; 2 * t < 40; ++t) {
    const auto c = stirling_binomial_bound(40, t);
    EXPECT_GE(c.log_bound - c.log_exact, sw.worst.log_bound - sw.worst.log_exact - 1e-12);
  }
}

TEST(Prefactor, SmallCells) {
  EXPECT_TRUE(prefactor_inequality(3, 1));
  EXPECT_TRUE(prefactor_inequality(1000, 499));
}

TEST(Entropy, Kappa0) { EXPECT_NEAR(kappa0(1.0), std::exp(-1.0), 1e-15); }

TEST(Entropy, ReferenceCells) {
  const auto a = entropy_bound(100, 5, 0.05, 1.0);
  EXPECT_NEAR(a.log_exact, 18.137, 1e-3);
  EXPECT_NEAR(a.bound, 29.96, 0.01);
  EXPECT_TRUE(a.pass);
  const auto b = entropy_bound(100, 30, 0.3, 1.0);
  EXPECT_NEAR(b.log_exact, 58.64, 0.01);
  EXPECT_NEAR(b.bound, 72.24, 0.01);
  EXPECT_TRUE(b.pass);
  const auto z = entropy_bound(100, 0, 0.3, 1.0);
  EXPECT_EQ(z.log_exact, 0.0);
  EXPECT_TRUE(z.pass);
}

TEST(Entropy, AboveKappa0Rejected) { EXPECT_THROW(entropy_bound(100, 10, 0.4, 1.0), std::invalid_argument); }

TEST(Entropy, SharpnessProbeFailsForLargeL) {
  const auto sw = entropy_sweep(2000, 0.2, 0.5);
  EXPECT_GT(sw.failures, 0U);
}

TEST(LtConstraints, CollapseAtMuTenth) {
  const auto c = lt_constraints(101, 100, 1, 0.1, std::sqrt(10.0));
  EXPECT_NEAR(c.outside_limit, 0.01086, 1e-5);
  EXPECT_TRUE(c.pass());
  EXPECT_FALSE(lt_constraints(102, 100, 1, 0.1, std::sqrt(10.0)).outside_pass);
  EXPECT_FALSE(lt_constraints(100, 100, 2, 0.1, std::sqrt(10.0)).visit_pass);
  EXPECT_FALSE(lt_constraints(110, 100, 1, 0.1, std::sqrt(10.0)).pass());
}

TEST(Delta, ValueAtTen) { EXPECT_NEAR(delta_bound(10, 0.1), 0.84557, 1e-5); }

TEST(Delta, DecaysInN) {
  EXPECT_GT(delta_bound(700, 0.1), 1e-4);
  const int n = smallest_n_below(0.1, 1e-6);
  EXPECT_GT(n, 700);
  EXPECT_LT(delta_bound(n, 0.1), 1e-6);
  EXPECT_GE(delta_bound(n - 1, 0.1), 1e-6);
  for (int k = n; k < n + 200; ++k) EXPECT_LT(delta_bound(k, 0.1), 1e-6);
  EXPECT_DOUBLE_EQ(delta_argmax(0.1), 80.0);
  EXPECT_GT(delta_bound(80, 0.1), delta_bound(81, 0.1));
}

TEST(Delta, VanishesWithMu) {
  double prev = delta_bound(10, 0.1);
  for (double mu : {1e-2, 1e-4, 1e-8}) {
    const double d = delta_bound(10, mu);
    EXPECT_LT(d, prev);
    prev = d;
  }
  EXPECT_LT(prev, 1e-6);
}

TEST(Lemma, MuFiveHundredths) {
  const double mu = 0.05, slope = mu / (-4.0 * std::log(mu));
  // No t >= 1 is admissible at l = 200.
  EXPECT_EQ(static_cast<int>(std::floor(slope * 200)), 0);
  for (int l = 240; l <= 1000; ++l)
    for (int t = 1; t <= static_cast<int>(std::floor(slope * l)); ++t) EXPECT_TRUE(lemma_cell(l, t, mu).pass) << l;
  EXPECT_FALSE(lemma_cell(1199, 5, mu).pass);
}

TEST(Lemma, FailsAtMuTenthForLongWords) {
  const auto c = lemma_cell(369, 4, 0.1);
  EXPECT_FALSE(c.pass);
  EXPECT_NEAR(c.log_exact, 15.93, 0.01);
  EXPECT_NEAR(c.bound, 14.99, 0.01);
}

TEST(VolumeChain, UniformToyIsTrivial) {
  const repeller::families::TriplingToy f;
  repeller::holes::CensusOptions o;
  o.samples = 20000;
  const auto cells = repeller::holes::q_census(f, 6, std::log(3.0) * (1.0 + 1e-9), o);
  ASSERT_FALSE(cells.empty());
  for (const auto& c : cells) EXPECT_EQ(c.l, 0);
  const auto rep = volume_chain_check(0.1, 3.0, 2, 6, cells);
  EXPECT_TRUE(rep.rows_pass());
}

TEST(VolumeChain, HopfSumBelowExponential) {
  repeller::families::Hopf2DParams p;
  p.mu = 0.1;
  const repeller::families::HopfModel2D m(p);
  repeller::holes::CensusOptions o;
  o.samples = 100000;
  const auto cells = repeller::holes::q_census(m, 8, m.c0() * m.hole_volume(), o);
  const auto rep = volume_chain_check(0.1, std::sqrt(10.0), m.intersection_bound(), 8, cells);
  EXPECT_TRUE(rep.eta_ok);
  EXPECT_LE(rep.total_volume, std::exp(-0.2));
  EXPECT_TRUE(rep.sum_pass);
}
