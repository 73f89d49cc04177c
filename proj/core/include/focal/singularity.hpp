#pragma once

#include <array>
#include <string>
#include <string_view>

#include "focal/curve.hpp"

namespace focal {

enum class SingKind { Regular, A, AtLeast, DegenerateConstant };

/// Regular, A_k (k = 1..4), A_ge(k), or a distance function constant to
/// working precision.
struct SingClass {
  SingKind kind = SingKind::Regular;
  int k = 0;

  static SingClass regular() { return {SingKind::Regular, 0}; }
  static SingClass a(int k) { return {SingKind::A, k}; }
  static SingClass at_least(int k) { return {SingKind::AtLeast, k}; }
  static SingClass degenerate_constant() { return {SingKind::DegenerateConstant, 0}; }

  /// True for A_j with j >= k, A_ge(j) with j >= k, and DegenerateConstant.
  bool is_at_least(int order) const;

  friend bool operator==(const SingClass&, const SingClass&) = default;
};

std::string to_string(const SingClass& c);

/// Derivatives f^(0..5) of t -> <g(t) - v, g(t) - v>.
struct DistanceJet {
  std::array<double, 6> f{};
  double scale = 1.0;  // max(1, |g - v|_E^2, |g'|_E^2)
};

DistanceJet dist_jet(const CurveDef& def, double t, const MVector& v);

/// Derivatives h^(0..5) of the height function t -> <g(t), v>.
std::array<double, 6> height_jet(const CurveDef& def, double t, const MVector& v);

/// max_p |f^(p) + 2 h^(p)| / scale over p = 1..5; zero on the unit pseudo-sphere.
double height_agreement(const CurveDef& def, double t, const MVector& v);

SingClass classify(const CurveDef& def, double t, const MVector& v, double tol = kDefaultTol);
SingClass classify_jet(const DistanceJet& j, double tol = kDefaultTol);

/// Local model of the bifurcation set at an A2, A3 or A4 point.
std::string_view local_model(const SingClass& c);

enum class ContactSphere { DeSitterLike, HyperbolicLike, LightconeLike };

std::string_view to_string(ContactSphere c);

ContactSphere contact_sphere_type(const CurveDef& def, double t, const MVector& v,
                                  double tol = kDefaultTol);

}  // namespace focal
