#pragma once

#include "focal/causal.hpp"
#include "focal/curve.hpp"

namespace focal {

/// Frame of a non-lightlike curve in R^3_1 at native parameter t.
struct FrameR31 {
  double param = 0.0;
  double ds_dt = 0.0;
  MVector point, tangent, normal, binormal;
  double k = 0.0;
  double dk = 0.0;  // dk/ds
  double tau = 0.0;
  int eps = 1;    // sign <tangent, tangent>
  int delta = 1;  // sign <normal, normal>
  /// Torsion from a central difference of the binormal; NaN when the
  /// stencil leaves the usable part of the domain.
  double tau_fd = 0.0;
  bool torsion_mismatch = false;
};

/// The R^3_1 frame as series in the arc-length increment. tangent has order
/// `order - 1`, normal/binormal/k have order `order - 2`.
struct FrameSeriesR31 {
  SeriesVec point, tangent, normal, binormal;
  Series k;
  int eps = 1;
  int delta = 1;
  double ds_dt = 0.0;
};

FrameSeriesR31 frame_series_r31(const Curve& curve, double t, int order, double tol = kDefaultTol);
FrameR31 frame_r31(const Curve& curve, double t, double tol = kDefaultTol);

/// Frame of a curve on S^2_1: normal = gamma ^ tangent.
struct FrameS21 {
  double param = 0.0;
  double ds_dt = 0.0;
  MVector point, tangent, normal;
  double kg = 0.0;
  double dkg = 0.0;  // d kg / ds
  int eps = 1;
  int delta = 1;
};

struct FrameSeriesS21 {
  SeriesVec point, tangent, normal;
  Series kg;
  int eps = 1;
  int delta = 1;
  double ds_dt = 0.0;
};

FrameSeriesS21 frame_series_s21(const Curve& curve, double t, int order, double tol = kDefaultTol);
FrameS21 frame_s21(const Curve& curve, double t, double tol = kDefaultTol);

enum class S31Kind { SpacelikeCurve, TimelikeCurve };

/// Frame of a curve on S^3_1. For spacelike curves `curvature` and `torsion`
/// are the geodesic pair (kg, taug) and delta = sign <normal, normal>; for
/// timelike curves they are the hyperbolic pair (kh, tauh) and delta = 1.
struct FrameS31 {
  double param = 0.0;
  double ds_dt = 0.0;
  S31Kind kind = S31Kind::SpacelikeCurve;
  MVector point, tangent, normal, binormal;
  double curvature = 0.0;
  double dcurvature = 0.0;
  double torsion = 0.0;
  int delta = 1;
};

struct FrameSeriesS31 {
  S31Kind kind = S31Kind::SpacelikeCurve;
  SeriesVec point, tangent, normal, binormal;
  Series curvature;
  double torsion = 0.0;
  int delta = 1;
  double ds_dt = 0.0;
};

FrameSeriesS31 frame_series_s31(const Curve& curve, double t, int order, double tol = kDefaultTol);
FrameS31 frame_s31(const Curve& curve, double t, double tol = kDefaultTol);

}  // namespace focal
