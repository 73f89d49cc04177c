#include <gtest/gtest.h>

#include <cmath>

#include "focal/errors.hpp"
#include "focal/singularity.hpp"
#include "oracles.hpp"

using namespace focal;
using namespace focal::oracle;

namespace {

double dist_sq(const CurveDef& def, double t, const MVector& v) {
  const MVector d = curve_point(def, t) - v;
  return mdot_ref(d, d);
}

DistanceJet jet(std::array<double, 6> f) {
  DistanceJet j;
  j.f = f;
  j.scale = 1.0;
  return j;
}

}  // namespace

TEST(DistanceJet, MatchesFivePointStencils) {
  const CurveDef def = load_fixture("r31_lightlike.curve");
  for (const MVector& v : {MVector{0, 0, -2}, MVector{0, 0, 1}, MVector{0.3, -0.2, 0.5}}) {
    for (double t : {0.0, 0.3}) {
      const DistanceJet j = dist_jet(def, t, v);
      for (int p = 1; p <= 4; ++p) {
        const double ref = fd([&](double s) { return dist_sq(def, s, v); }, t, p, 1e-2);
        EXPECT_NEAR(j.f[static_cast<std::size_t>(p)], ref, 1e-5 * std::max(1.0, std::abs(ref))) << p;
      }
    }
  }
}

TEST(DistanceJet, ScaleDefinition) {
  const CurveDef def = load_fixture("r31_lightlike.curve");
  const DistanceJet j = dist_jet(def, 0.0, MVector{0, 0, -2});
  // |g - v|_E^2 = 4, |g'|_E^2 = 2.
  EXPECT_DOUBLE_EQ(j.scale, 4.0);
}

TEST(Classify, SyntheticJets) {
  EXPECT_EQ(classify_jet(jet({0, 1, 0, 0, 0, 0})), SingClass::regular());
  EXPECT_EQ(classify_jet(jet({0, 0, 1, 0, 0, 0})), SingClass::a(1));
  EXPECT_EQ(classify_jet(jet({0, 0, 0, 1, 0, 0})), SingClass::a(2));
  EXPECT_EQ(classify_jet(jet({0, 0, 0, 0, 1, 0})), SingClass::a(3));
  EXPECT_EQ(classify_jet(jet({0, 0, 0, 0, 0, 1})), SingClass::a(4));
  EXPECT_EQ(classify_jet(jet({0, 0, 0, 0, 0, 0})), SingClass::at_least(5));
  // Thresholds scale with p!.
  EXPECT_EQ(classify_jet(jet({0, 1e-11, 5e-11, 1, 0, 0})), SingClass::a(2));
}

TEST(Classify, LightlikeChartPoints) {
  const CurveDef def = load_fixture("r31_lightlike.curve");
  EXPECT_EQ(classify(def, 0.0, MVector{0, 0, -2}), SingClass::a(2));
  const SingClass at_mu0 = classify(def, 0.0, MVector{0, 0, 1});
  EXPECT_TRUE(at_mu0.is_at_least(3));
  EXPECT_EQ(at_mu0, SingClass::a(3));
  EXPECT_EQ(classify(def, 0.0, MVector{1, 0, 0}), SingClass::regular());
}

TEST(Classify, ConstantDistanceIsDegenerate) {
  const CurveDef circle = load_fixture("s31_circle.curve");
  EXPECT_EQ(classify(circle, 0.3, MVector{0, 0, 0, 1}), SingClass::degenerate_constant());
  const CurveDef hyperbola = load_fixture("s21_hyperbola.curve");
  EXPECT_EQ(classify(hyperbola, 0.1, MVector{0, 0, -1}), SingClass::degenerate_constant());
}

TEST(Classify, Labels) {
  EXPECT_EQ(to_string(SingClass::a(2)), "A2");
  EXPECT_EQ(to_string(SingClass::at_least(5)), "A_ge(5)");
  EXPECT_EQ(to_string(SingClass::regular()), "Regular");
  EXPECT_EQ(to_string(SingClass::degenerate_constant()), "DegenerateConstant");
  EXPECT_EQ(local_model(SingClass::a(2)), "plane R^2");
  EXPECT_EQ(local_model(SingClass::a(3)), "cuspidal edge");
  EXPECT_EQ(local_model(SingClass::a(4)), "swallowtail");
  EXPECT_THROW(local_model(SingClass::regular()), UsageError);
  EXPECT_TRUE(SingClass::at_least(5).is_at_least(3));
  EXPECT_TRUE(SingClass::degenerate_constant().is_at_least(3));
  EXPECT_FALSE(SingClass::a(2).is_at_least(3));
}

TEST(ContactSphere, SignOfSquaredDistance) {
  const CurveDef def = load_fixture("r31_lightlike.curve");
  EXPECT_EQ(contact_sphere_type(def, 0.0, MVector{0, 0, -2}), ContactSphere::DeSitterLike);
  EXPECT_EQ(contact_sphere_type(def, 0.0, MVector{2, 0, 0}), ContactSphere::HyperbolicLike);
  EXPECT_EQ(contact_sphere_type(def, 0.0, MVector{1, 1, 0}), ContactSphere::LightconeLike);
  EXPECT_THROW(contact_sphere_type(def, 0.0, MVector{0, 0, 0}), DegenerateError);
}

TEST(HeightFunction, AgreesWithDistanceOnThePseudoSphere) {
  const CurveDef def = load_fixture("s21_example.curve");
  const MVector v{0.3, 0.4, std::sqrt(1 + 0.09 - 0.16)};
  EXPECT_LE(height_agreement(def, 0.1, v), 1e-12);
  const auto h = height_jet(def, 0.1, v);
  const double ref = fd([&](double s) { return mdot_ref(curve_point(def, s), v); }, 0.1, 1, 1e-3);
  EXPECT_NEAR(h[1], ref, 1e-9);
}
