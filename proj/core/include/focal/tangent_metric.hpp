#pragma once

#include <optional>
#include <string_view>

#include "focal/mvector.hpp"

namespace focal {

enum class MetricClass { Riemannian, Lorentzian, Degenerate, Undefined };

std::string_view to_string(MetricClass c);

/// Induced metric on span(p1, p2): entries <p1,p1>, <p1,p2>, <p2,p2>.
struct Gram {
  double g11 = 0.0;
  double g12 = 0.0;
  double g22 = 0.0;

  double det() const { return g11 * g22 - g12 * g12; }
  double trace() const { return g11 + g22; }
};

struct TangentMetric {
  Gram gram;
  MetricClass cls = MetricClass::Undefined;
  bool full_rank = false;
  /// Scale against which det is judged: max(1, |p1|_E^2 |p2|_E^2).
  double scale = 1.0;
  /// For Degenerate planes: the lightlike tangent direction, scaled so its
  /// largest-magnitude component is +1.
  std::optional<MVector> lightlike_direction;
};

TangentMetric tangent_metric(const MVector& p1, const MVector& p2, double tol = kDefaultTol);

/// Scales v so its largest-magnitude component equals +1.
MVector normalise_max_component(const MVector& v);

}  // namespace focal
