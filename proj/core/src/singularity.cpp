#include "focal/singularity.hpp"

#include <algorithm>
#include <cmath>

#include "focal/errors.hpp"

namespace focal {

namespace {

constexpr int kJetOrder = 5;

constexpr double kFactorial[] = {1, 1, 2, 6, 24, 120};

}  // namespace

bool SingClass::is_at_least(int order) const {
  switch (kind) {
    case SingKind::Regular: return false;
    case SingKind::A:
    case SingKind::AtLeast: return k >= order;
    case SingKind::DegenerateConstant: return true;
  }
  return false;
}

std::string to_string(const SingClass& c) {
  switch (c.kind) {
    case SingKind::Regular: return "Regular";
    case SingKind::A: return "A" + std::to_string(c.k);
    case SingKind::AtLeast: return "A_ge(" + std::to_string(c.k) + ")";
    case SingKind::DegenerateConstant: return "DegenerateConstant";
  }
  return "?";
}

DistanceJet dist_jet(const CurveDef& def, double t, const MVector& v) {
  require_same_dim(MVector::zero(def.dim()), v);
  const SeriesVec g = curve_series(def, t, kJetOrder);
  const SeriesVec d = g - SeriesVec::constant(v, kJetOrder);
  // Series product of d with itself is the Leibniz sum of <d^(j), d^(p-j)>.
  const Series f = mdot(d, d);
  DistanceJet j;
  for (int p = 0; p <= kJetOrder; ++p) j.f[static_cast<std::size_t>(p)] = f.derivative(p);
  j.scale = std::max({1.0, euclidean_norm_sq(d.value()), euclidean_norm_sq(g.derivative(1))});
  return j;
}

std::array<double, 6> height_jet(const CurveDef& def, double t, const MVector& v) {
  require_same_dim(MVector::zero(def.dim()), v);
  const SeriesVec g = curve_series(def, t, kJetOrder);
  const Series h = mdot(g, SeriesVec::constant(v, kJetOrder));
  std::array<double, 6> out{};
  for (int p = 0; p <= kJetOrder; ++p) out[static_cast<std::size_t>(p)] = h.derivative(p);
  return out;
}

double height_agreement(const CurveDef& def, double t, const MVector& v) {
  const DistanceJet f = dist_jet(def, t, v);
  const auto h = height_jet(def, t, v);
  double worst = 0.0;
  for (std::size_t p = 1; p <= kJetOrder; ++p)
    worst = std::max(worst, std::abs(f.f[p] + 2.0 * h[p]) / f.scale);
  return worst;
}

SingClass classify_jet(const DistanceJet& j, double tol) {
  for (int p = 1; p <= kJetOrder; ++p) {
    if (std::abs(j.f[static_cast<std::size_t>(p)]) > tol * j.scale * kFactorial[p])
      return p == 1 ? SingClass::regular() : SingClass::a(p - 1);
  }
  return SingClass::at_least(kJetOrder);
}

SingClass classify(const CurveDef& def, double t, const MVector& v, double tol) {
  const DistanceJet j = dist_jet(def, t, v);
  const SingClass c = classify_jet(j, tol);
  if (c.kind != SingKind::AtLeast) return c;
  // Every tested derivative vanished: separate a flat f from a high-order contact.
  const double w = def.domain.width();
  for (double frac : {1e-3, 1e-2, 1e-1}) {
    for (double sgn : {-1.0, 1.0}) {
      const double tt = std::clamp(t + sgn * frac * w, def.domain.lo, def.domain.hi);
      double f;
      try {
        f = dist_jet(def, tt, v).f[0];
      } catch (const NumericError&) {
        continue;
      }
      if (std::abs(f - j.f[0]) > tol * j.scale) return c;
    }
  }
  return SingClass::degenerate_constant();
}

std::string_view local_model(const SingClass& c) {
  if (c.kind == SingKind::A) {
    switch (c.k) {
      case 2: return "plane R^2";
      case 3: return "cuspidal edge";
      case 4: return "swallowtail";
      default: break;
    }
  }
  throw UsageError("no local model for singularity class " + to_string(c));
}

std::string_view to_string(ContactSphere c) {
  switch (c) {
    case ContactSphere::DeSitterLike: return "DeSitterLike";
    case ContactSphere::HyperbolicLike: return "HyperbolicLike";
    case ContactSphere::LightconeLike: return "LightconeLike";
  }
  return "?";
}

ContactSphere contact_sphere_type(const CurveDef& def, double t, const MVector& v, double tol) {
  const MVector d = curve_point(def, t) - v;
  if (euclidean_norm_sq(d) <= tol * tol * std::max(1.0, euclidean_norm_sq(v)))
    throw DegenerateError("contact sphere undefined: v coincides with the curve point");
  switch (causal_type(d, tol)) {
    case CausalType::Spacelike: return ContactSphere::DeSitterLike;
    case CausalType::Timelike: return ContactSphere::HyperbolicLike;
    case CausalType::Lightlike: return ContactSphere::LightconeLike;
  }
  return ContactSphere::LightconeLike;
}

}  // namespace focal
