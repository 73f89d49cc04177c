#include <gtest/gtest.h>

#include <cmath>

#include "focal/causal.hpp"
#include "focal/errors.hpp"
#include "oracles.hpp"

using namespace focal;
using namespace focal::oracle;

TEST(Lightlike, ExampleOnDeSitterPlane) {
  const CurveDef def = load_fixture("s21_example.curve");
  const auto pts = find_lightlike_points(def);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_TRUE(pts[0].certified);
  EXPECT_LE(std::abs(pts[0].t_star), 1e-10);
  // Closed form: <g',g'> = 8t + 36t^4/(1 - 4t^3); <g'', g'> at 0 from g'(0) = (-1, 1, 0), g''(0) = (2, 2, 0).
  const MVector d1{-1, 1, 0}, d2{2, 2, 0};
  EXPECT_NEAR(pts[0].omega_value, mdot_ref(d2, d1) + 0.0, 1e-9);
  EXPECT_NEAR(pts[0].omega_value, 4.0, 1e-9);
  EXPECT_NEAR(pts[0].speed_derivative, 8.0, 1e-8);
}

TEST(Lightlike, SpeedMatchesClosedForm) {
  const CurveDef def = load_fixture("s21_example.curve");
  for (double t : {-0.25, -0.1, 0.05, 0.2}) {
    const double closed = 8 * t + 36 * std::pow(t, 4) / (1 - 4 * t * t * t);
    EXPECT_NEAR(speed_sq(def, t), closed, 1e-12);
  }
}

TEST(Lightlike, PolynomialCurveHasTwoPoints) {
  // <g',g'> = 4t + 4t^2 + 9t^4: roots 0 and the real negative root of 9t^3 + 4t + 4.
  const CurveDef def = load_fixture("r31_lightlike.curve");
  const auto pts = find_lightlike_points(def);
  ASSERT_EQ(pts.size(), 2u);
  const double other = bisect([](double t) { return 9 * t * t * t + 4 * t + 4; }, -1.0, 0.0);
  EXPECT_NEAR(pts[0].t_star, other, 1e-12);
  EXPECT_NEAR(pts[1].t_star, 0.0, 1e-12);
  EXPECT_NEAR(pts[1].omega_value, 2.0, 1e-12);
  for (const auto& p : pts) EXPECT_TRUE(p.certified);
}

TEST(Lightlike, FourDimensionalCurveMatchesBisection) {
  const CurveDef def = load_fixture("s31_lightlike.curve");
  const auto pts = find_lightlike_points(def);
  ASSERT_EQ(pts.size(), 1u);
  const auto speed = [](double t) { return 8 * t + 36 * std::pow(t, 4) / (1 - 4 * t * t * t) + 1 - 4 * t * t * t; };
  EXPECT_NEAR(pts[0].t_star, bisect(speed, -0.2, -0.125), 1e-12);
  EXPECT_TRUE(pts[0].certified);
}

TEST(Lightlike, NoneOnNonDegenerateCurves) {
  EXPECT_TRUE(find_lightlike_points(load_fixture("r31_timelike.curve")).empty());
  EXPECT_TRUE(find_lightlike_points(load_fixture("r31_spacelike.curve")).empty());
}

TEST(Lightlike, TangentialZeroIsNotCertified) {
  // <g',g'> = t^2 touches zero without a sign change.
  const CurveDef def = make_curve(Ambient::R31, {"t", "t", "t^2/2"}, {-1, 1});
  const auto pts = find_lightlike_points(def);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_FALSE(pts[0].certified);
  EXPECT_NEAR(pts[0].t_star, 0.0, 1e-6);
}

TEST(Arcs, AlternateAcrossCertifiedPoints) {
  const CurveDef def = load_fixture("r31_lightlike.curve");
  const auto arcs = split_arcs(def, find_lightlike_points(def));
  ASSERT_EQ(arcs.size(), 3u);
  EXPECT_EQ(arcs[0].kind, CausalType::Spacelike);
  EXPECT_EQ(arcs[1].kind, CausalType::Timelike);
  EXPECT_EQ(arcs[2].kind, CausalType::Spacelike);
  EXPECT_DOUBLE_EQ(arcs.front().lo, -1.0);
  EXPECT_DOUBLE_EQ(arcs.back().hi, 1.0);
}

TEST(Omega, Membership) {
  const CurveDef def = load_fixture("r31_lightlike.curve");
  const OmegaCheck o = omega_check(def, 0.0);
  EXPECT_TRUE(o.in_omega);
  EXPECT_NEAR(o.value, 2.0, 1e-12);
}

TEST(ArcLength, UnitSpeedAndFiniteDifferenceAgreement) {
  const Curve curve(load_fixture("r31_spacelike.curve"));
  const double t0 = 1.2;
  const SeriesVec s = arclength_series(curve, t0, 4);
  EXPECT_NEAR(mdot(s.derivative(1), s.derivative(1)), 1.0, 1e-13);
  // ds/dt = sqrt(4 - cos 2t); unit tangent and its arc-length derivative by the chain rule.
  const auto sigma = [](double t) { return std::sqrt(4 - std::cos(2 * t)); };
  const auto tangent = [&](double t) { return MVector{std::cos(t), 2.0, -std::sin(t)} / sigma(t); };
  EXPECT_LE(max_abs_diff(s.derivative(1), tangent(t0)), 1e-14);
  EXPECT_LE(max_abs_diff(s.derivative(2), fd_vec(tangent, t0, 1, 1e-3) / sigma(t0)), 1e-10);
}

TEST(ArcLength, TimelikeUnitSpeed) {
  const Curve curve(load_fixture("r31_timelike.curve"));
  for (double t : {-0.8, 0.0, 0.6}) {
    const SeriesVec s = arclength_series(curve, t, 5);
    EXPECT_NEAR(mdot(s.derivative(1), s.derivative(1)), -1.0, 1e-13);
    // <T, T'> = 0 follows from unit speed.
    EXPECT_NEAR(mdot(s.derivative(1), s.derivative(2)), 0.0, 1e-12);
  }
}

TEST(ArcLength, GuardBandRefusesLightlikePoints) {
  const Curve curve(load_fixture("r31_lightlike.curve"));
  EXPECT_THROW(arclength_series(curve, 0.0, 3), ConditioningError);
  EXPECT_THROW(arclength_series(curve, 1e-12, 3), ConditioningError);
  EXPECT_NO_THROW(arclength_series(curve, 0.3, 3));
  const Curve tight(load_fixture("r31_lightlike.curve"), 1e-1);
  EXPECT_THROW(arclength_series(tight, 1e-3, 3), ConditioningError);
}

TEST(ArcLength, JetsAreUnitSpeed) {
  const Curve curve(load_fixture("s21_example.curve"));
  const auto jets = arclength_jet(curve, 0.15, 3);
  const auto v = jets_to_vectors(jets);
  EXPECT_NEAR(mdot(v[1], v[1]), 1.0, 1e-12);
}
