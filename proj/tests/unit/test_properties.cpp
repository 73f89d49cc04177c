// Invariants that must survive reparametrisation, scaling and Lorentz boosts.

#include <gtest/gtest.h>

#include <cmath>

#include "focal/causal.hpp"
#include "focal/errors.hpp"
#include "focal/export.hpp"
#include "focal/focal_desitter.hpp"
#include "focal/focal_r31.hpp"
#include "focal/frenet.hpp"
#include "focal/singularity.hpp"
#include "oracles.hpp"

using namespace focal;
using namespace focal::oracle;

namespace {

double cubic_shift(double u) { return u + u * u * u / 10; }

double cubic_shift_inverse(double t) {
  return bisect([t](double u) { return cubic_shift(u) - t; }, -10.0, 10.0);
}

CurveDef shifted(const CurveDef& def) {
  return reparametrize(def, parse_expr("t + t^3/10"),
                       {cubic_shift_inverse(def.domain.lo), cubic_shift_inverse(def.domain.hi)});
}

std::vector<std::string> component_text(const CurveDef& def) {
  std::vector<std::string> c;
  for (const auto& e : def.components) c.push_back(to_string(*e));
  return c;
}

// Boost mixing the timelike slot with x2.
CurveDef boosted(const CurveDef& def, double rapidity) {
  const auto c = component_text(def);
  const std::string ch = format_real(std::cosh(rapidity));
  const std::string sh = format_real(std::sinh(rapidity));
  auto out = c;
  out[0] = ch + "*" + c[0] + " + " + sh + "*" + c[1];
  out[1] = sh + "*" + c[0] + " + " + ch + "*" + c[1];
  return make_curve(def.ambient, out, def.domain);
}

CurveDef scaled(const CurveDef& def, double factor) {
  auto c = component_text(def);
  for (auto& s : c) s = format_real(factor) + "*" + s;
  return make_curve(def.ambient, c, def.domain);
}

// Matched (t, v) pairs: focal points, cuspidal points and generic points.
std::vector<std::pair<double, MVector>> probe_pairs(const CurveDef& def, Rng& rng) {
  const Curve curve(def);
  std::vector<std::pair<double, MVector>> out;
  const double lo = def.domain.lo + 0.05 * def.domain.width();
  const double hi = def.domain.hi - 0.05 * def.domain.width();
  while (out.size() < 30) {
    const double t = rng.uniform(lo, hi);
    const int kind = static_cast<int>(out.size() % 3);
    try {
      MVector v;
      if (kind == 2) {
        v = curve_point(def, t);
        for (int i = 0; i < v.dim(); ++i) v[i] += rng.uniform(-1.0, 1.0);
      } else if (def.ambient == Ambient::R31) {
        v = kind == 0 ? focal_surface(curve, t, rng.uniform(-1.0, 1.0)).point : cuspidal_curve(curve, t).point;
      } else if (def.ambient == Ambient::S21) {
        v = spherical_focal_curve(curve, t, 1).point;
      } else {
        v = kind == 0 ? spherical_focal_surface(curve, t, rng.uniform(-0.3, 0.3), 1).point
                      : spherical_cuspidal(curve, t, 1).point;
      }
      out.emplace_back(t, v);
    } catch (const NumericError&) {
    }
  }
  return out;
}

}  // namespace

class Reparametrisation : public ::testing::TestWithParam<const char*> {};

TEST_P(Reparametrisation, SingularityClassIsInvariant) {
  const CurveDef def = load_fixture(GetParam());
  const CurveDef re = shifted(def);
  Rng rng(101);
  int regular = 0, focal = 0;
  for (const auto& [t, v] : probe_pairs(def, rng)) {
    const SingClass a = classify(def, t, v);
    const SingClass b = classify(re, cubic_shift_inverse(t), v);
    EXPECT_EQ(a, b) << GetParam() << " t=" << t << ' ' << to_string(a) << " vs " << to_string(b);
    (a == SingClass::regular() ? regular : focal)++;
  }
  EXPECT_GT(regular, 0);
  EXPECT_GT(focal, 0);
}

TEST_P(Reparametrisation, LightlikePointsMove) {
  const CurveDef def = load_fixture(GetParam());
  const CurveDef re = shifted(def);
  const auto a = find_lightlike_points(def);
  const auto b = find_lightlike_points(re);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_NEAR(cubic_shift(b[i].t_star), a[i].t_star, 1e-10);
    EXPECT_EQ(a[i].certified, b[i].certified);
  }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, Reparametrisation,
                         ::testing::Values("r31_lightlike.curve", "r31_timelike.curve", "r31_spacelike.curve",
                                           "s21_example.curve", "s21_spiral.curve", "s31_lightlike.curve"),
                         [](const auto& info) {
                           std::string n = info.param;
                           return n.substr(0, n.find('.'));
                         });

TEST(Invariance, FrenetInvariantsUnderReparametrisation) {
  for (const char* name : {"r31_timelike.curve", "r31_spacelike.curve"}) {
    const CurveDef def = load_fixture(name);
    const Curve a(def), b(shifted(def));
    for (double t : {def.domain.lo + 0.3, def.domain.hi - 0.3}) {
      const FrameR31 fa = frame_r31(a, t);
      const FrameR31 fb = frame_r31(b, cubic_shift_inverse(t));
      EXPECT_NEAR(fa.k, fb.k, 1e-10 * std::max(1.0, fa.k));
      EXPECT_NEAR(fa.tau, fb.tau, 1e-9 * std::max(1.0, std::abs(fa.tau)));
      EXPECT_NEAR(fa.dk, fb.dk, 1e-9 * std::max(1.0, std::abs(fa.dk)));
      EXPECT_LE(max_abs_diff(focal_surface(a, t, 0.4).point, focal_surface(b, cubic_shift_inverse(t), 0.4).point),
                1e-10);
    }
  }
}

TEST(Invariance, LorentzBoost) {
  const double rapidity = 0.4;
  for (const char* name : {"r31_lightlike.curve", "r31_timelike.curve", "r31_spacelike.curve"}) {
    const CurveDef def = load_fixture(name);
    const CurveDef bd = boosted(def, rapidity);
    const auto pa = find_lightlike_points(def), pb = find_lightlike_points(bd);
    ASSERT_EQ(pa.size(), pb.size()) << name;
    for (std::size_t i = 0; i < pa.size(); ++i) EXPECT_NEAR(pa[i].t_star, pb[i].t_star, 1e-10);
    const Curve a(def), b(bd);
    for (double t : {def.domain.lo + 0.37, def.domain.hi - 0.21}) {
      FrameR31 fa, fb;
      try {
        fa = frame_r31(a, t);
      } catch (const ConditioningError&) {
        continue;
      }
      fb = frame_r31(b, t);
      EXPECT_NEAR(fa.k, fb.k, 1e-9 * std::max(1.0, fa.k)) << name;
      EXPECT_NEAR(std::abs(fa.tau), std::abs(fb.tau), 1e-8 * std::max(1.0, std::abs(fa.tau))) << name;
      EXPECT_EQ(focal_surface(a, t, 0.7).metric.cls, focal_surface(b, t, 0.7).metric.cls);
    }
  }
}

TEST(Invariance, HomothetyScalesCurvature) {
  const CurveDef def = load_fixture("r31_spacelike.curve");
  const Curve a(def), b(scaled(def, 3.0));
  for (double t : {0.4, 2.2}) {
    EXPECT_NEAR(frame_r31(b, t).k, frame_r31(a, t).k / 3.0, 1e-12);
    EXPECT_LE(max_abs_diff(focal_surface(b, t, 0.0).point, 3.0 * focal_surface(a, t, 0.0).point), 1e-11);
    EXPECT_EQ(find_lightlike_points(b.def()).size(), find_lightlike_points(def).size());
  }
}

TEST(Properties, RandomFocalSamplesSatisfyTheDefiningProperty) {
  Rng rng(5);
  const CurveDef def = load_fixture("r31_spacelike.curve");
  const Curve curve(def);
  for (int i = 0; i < 200; ++i) {
    const double t = rng.uniform(0.05, 2.95);
    const FocalSample s = focal_surface(curve, t, rng.uniform(-3.0, 3.0));
    const DistanceJet j = dist_jet(def, t, s.point);
    EXPECT_LE(std::abs(j.f[1]) / j.scale, 1e-10);
    EXPECT_LE(std::abs(j.f[2]) / j.scale, 1e-10);
  }
}

TEST(Properties, FocalPointsLieOnTheNormalLine) {
  // v - g(t) is pseudo-orthogonal to the tangent for every focal sample.
  Rng rng(9);
  const CurveDef def = load_fixture("r31_timelike.curve");
  const Curve curve(def);
  for (int i = 0; i < 100; ++i) {
    const double t = rng.uniform(-0.95, 0.95);
    const FocalSample s = focal_surface(curve, t, rng.uniform(-2.0, 2.0));
    const MVector d1 = fd_vec(point_fn(def), t, 1, 1e-3);
    EXPECT_NEAR(mdot_ref(s.point - curve_point(def, t), d1), 0.0, 1e-8 * euclidean_norm(s.point));
  }
}
