#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "repeller/families/diaz_viana.hpp"
#include "repeller/families/escape.hpp"
#include "repeller/families/hopf2d.hpp"
#include "repeller/families/hopf3d.hpp"
#include "repeller/families/jacobian_check.hpp"
#include "repeller/families/phi_profile.hpp"
#include "repeller/families/registry.hpp"
#include "repeller/families/toys.hpp"

using namespace repeller::families;
using repeller::geometry::TorusPoint;

namespace {

HopfModel2D hopf(double mu) {
  Hopf2DParams p;
  p.mu = mu;
  return HopfModel2D(p);
}

// Independent root of Phi(w) = 1 on [0, delta0] by plain bisection.
double bisect_rho(const PhiProfile& phi) {
  double lo = 0.0, hi = phi.delta0();
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (phi.value(mid) < 1.0 ? lo : hi) = mid;
  }
  return std::sqrt(0.5 * (lo + hi));
}

}  // namespace

class PhiGrid : public ::testing::TestWithParam<double> {};

TEST_P(PhiGrid, ConditionsHoldAt2048Points) {
  const double mu = GetParam();
  const auto phi = PhiProfile::build(mu, std::sqrt(10.0), 0.005, 0.0025, 1.5);
  const auto c = phi.verify(2048);
  EXPECT_TRUE(c.all()) << c.first_failure;
  EXPECT_EQ(c.points, 2048U);
  EXPECT_DOUBLE_EQ(phi.value(0.0), 1.0 - mu);
  for (double w : {0.005, 0.0051, 0.01, 1.0}) EXPECT_DOUBLE_EQ(phi.value(w), std::sqrt(10.0));
  double min_slope = phi.derivative(0.0);
  for (int i = 1; i <= 256; ++i) min_slope = std::min(min_slope, phi.derivative(0.0025 * i / 256.0));
  EXPECT_DOUBLE_EQ(min_slope, phi.derivative(0.0));
}

INSTANTIATE_TEST_SUITE_P(Mu, PhiGrid, ::testing::Values(0.0, 0.05, 0.2));

TEST(Phi, InfeasibleParametersNameTheCondition) {
  try {
    PhiProfile::build(0.05, std::sqrt(10.0), 0.005, 0.0025, 10.0);
    FAIL() << "expected PhiConditionError";
  } catch (const PhiConditionError& e) {
    EXPECT_FALSE(e.condition().empty());
  }
}

TEST(Hopf2D, RhoInvZeroAtBifurcation) { EXPECT_EQ(hopf(0.0).rho_inv(), 0.0); }

TEST(Hopf2D, RhoInvMatchesBisectionAndFirstOrder) {
  const auto m = hopf(0.01);
  EXPECT_NEAR(m.rho_inv(), bisect_rho(m.phi()), 1e-10);
  EXPECT_NEAR(m.rho_inv() / m.rho_first_order(), 1.0, 0.05);
  EXPECT_NEAR(m.rho_first_order(), std::sqrt(0.01 / m.phi().b1()), 1e-15);
}

TEST(Hopf2D, RhoInvScalesLikeSqrtMu) {
  std::vector<double> x, y;
  for (int i = 0; i <= 8; ++i) {
    const double mu = std::pow(10.0, -4.0 + 0.25 * i);
    x.push_back(std::log(mu));
    y.push_back(std::log(bisect_rho(hopf(mu).phi())));
  }
  const Eigen::Map<Eigen::VectorXd> X(x.data(), 9), Y(y.data(), 9);
  const double slope = ((X.array() - X.mean()) * (Y.array() - Y.mean())).sum() / (X.array() - X.mean()).square().sum();
  EXPECT_NEAR(slope, 0.5, 0.05);
}

TEST(Hopf2D, FarPointFollowsMatrix) {
  const auto m = hopf(0.05);
  const TorusPoint x{0.3, 0.45};
  const Eigen::Vector2d c(0.3, 0.45);
  const Eigen::Vector2d img = HopfModel2D::matrix() * c;
  const TorusPoint y = m.forward(x);
  EXPECT_NEAR(y[0], img[0] - std::floor(img[0]), 1e-12);
  EXPECT_NEAR(y[1], img[1] - std::floor(img[1]), 1e-12);
}

TEST(Hopf2D, InvariantCircleRotatesByAlpha) {
  const auto m = hopf(0.1);
  const double r = m.rho_inv(), a0 = 0.4;
  const auto y = m.forward(TorusPoint::wrapped(std::array<double, 3>{r * std::cos(a0), r * std::sin(a0), 0.0}, 2));
  const auto c = y.centered_lift();
  EXPECT_NEAR(std::hypot(c[0], c[1]), r, 1e-12);
  const double turn = std::remainder(std::atan2(c[1], c[0]) - a0 - HopfModel2D::alpha(), 2.0 * std::numbers::pi);
  EXPECT_NEAR(turn, 0.0, 1e-12);
}

TEST(Hopf2D, InverseBranchesInvertForward) {
  const auto m = hopf(0.1);
  for (const TorusPoint x : {TorusPoint{0.3, 0.45}, TorusPoint{0.02, 0.03}, TorusPoint{0.71, 0.12}}) {
    ASSERT_FALSE(m.in_hole(x));
    const auto back = m.inverse(m.symbol(x), m.forward(x));
    EXPECT_LT(repeller::geometry::torus_distance(back, x), 1e-10);
  }
}

TEST(Hopf2D, JacobianBounds) {
  const auto m = hopf(0.05);
  const auto rep = jacobian_bounds_check(m, 100000, 3);
  EXPECT_TRUE(rep.outside_v1.pass) << rep.outside_v1.measured_min;
  EXPECT_GE(rep.outside_v1.measured_min, 2.0 * std::log(1.5));
  EXPECT_TRUE(rep.outside_hole.pass) << rep.outside_hole.measured_min;
  EXPECT_GE(rep.outside_hole.measured_min, 61.0 / 32.0 * 0.05);
  EXPECT_DOUBLE_EQ(rep.at_fixed_point, 2.0 * std::log(0.95));
  EXPECT_LT(rep.at_fixed_point, 0.0);
}

TEST(Hopf3D, SpectralCertificate) {
  const auto cert = HopfModel3D::spectral_certificate();
  EXPECT_TRUE(cert.ok());
  EXPECT_NEAR(cert.det, 1.0, 1e-12);
}

TEST(Hopf3D, NeutralAtBifurcation) {
  Hopf3DParams p;
  p.mu = 0.0;
  const HopfModel3D m(p);
  const Eigen::Matrix3d J = m.local_jacobian(Eigen::Vector3d::Zero());
  const Eigen::Matrix2d planar = J.topLeftCorner<2, 2>();
  EXPECT_NEAR(std::sqrt(std::abs(planar.determinant())), 1.0, 1e-12);
  EXPECT_NEAR(J(2, 2), m.lambda(), 1e-12);
}

TEST(Escape, EverythingSurvivesBeforeBifurcation) {
  for (const char* fam : {"hopf2d", "hopf3d"}) {
    FamilySpec s;
    s.family = fam;
    s.mu = -0.01;
    const auto model = make_model(s);
    EXPECT_FALSE(model->has_trap());
    const auto survives = survival_test(*model, 200);
    repeller::geometry::Rng rng(9);
    for (int i = 0; i < 200; ++i) {
      TorusPoint x = model->dimension() == 2 ? TorusPoint{rng.uniform(), rng.uniform()}
                                             : TorusPoint{rng.uniform(), rng.uniform(), rng.uniform()};
      EXPECT_TRUE(survives(x));
    }
  }
}

TEST(Escape, InsideCircleIsCaptured) {
  const auto m = hopf(0.1);
  const double r = 0.9 * m.rho_inv();
  const auto res = escape_time(m, TorusPoint::wrapped(std::array<double, 3>{r, 0.0, 0.0}, 2), 10000, m.trap_region());
  EXPECT_FALSE(res.survives);
  EXPECT_LE(res.steps, 100U);
}

TEST(Escape, InvariantCircleSurvives) {
  const auto m = hopf(0.1);
  const double r = m.rho_inv();
  const auto x = TorusPoint::wrapped(std::array<double, 3>{r * std::cos(1.0), r * std::sin(1.0), 0.0}, 2);
  // The circle repels, so rounding error grows geometrically along the orbit.
  EXPECT_TRUE(escape_time(m, x, 100, m.trap_region()).survives);
}

TEST(Escape, TrapIsForwardInvariant) {
  const auto m = hopf(0.05);
  EXPECT_TRUE(check_trap_invariance(m, 10000, 1).verified);
}

TEST(DiazViana, ExpandingOffTheHole) {
  DiazVianaParams p;
  p.t = 0.01;
  const DiazVianaFamily f(p);
  ASSERT_GT(f.rho_inv(), 0.0);
  EXPECT_DOUBLE_EQ(f.hole_volume(), 2.0 * f.rho_inv());
  for (int i = 0; i < 20000; ++i) {
    const TorusPoint x{(i + 0.5) / 20000.0};
    if (!f.in_hole(x)) EXPECT_GT(f.derivative(x), 1.0) << x[0];
  }
}

TEST(DiazViana, HoleShrinksWithT) {
  double prev = 1.0;
  for (double t : {0.05, 0.01, 0.001, 0.0001}) {
    DiazVianaParams p;
    p.t = t;
    const double h = DiazVianaFamily(p).hole_volume();
    EXPECT_LT(h, prev);
    prev = h;
  }
}

TEST(Toys, TriplingBranches) {
  const TriplingToy f;
  EXPECT_TRUE(f.in_hole(TorusPoint{0.5}));
  EXPECT_EQ(f.symbol(TorusPoint{0.1}), 0);
  EXPECT_EQ(f.symbol(TorusPoint{0.9}), 1);
  EXPECT_NEAR(f.forward(TorusPoint{0.9})[0], 0.7, 1e-12);
  EXPECT_NEAR(f.inverse(1, TorusPoint{0.7})[0], 0.9, 1e-12);
}

TEST(Registry, BuildsEveryFamily) {
  for (const auto& name : family_names()) {
    FamilySpec s;
    s.family = name;
    s.mu = 0.05;
    EXPECT_NO_THROW(make_model(s)) << name;
    if (has_symbolic_map(name)) EXPECT_NO_THROW(make_map(s)) << name;
    else EXPECT_THROW(make_map(s), std::invalid_argument) << name;
  }
  FamilySpec s;
  s.family = "nope";
  EXPECT_THROW(make_model(s), std::invalid_argument);
}
