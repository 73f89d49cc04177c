#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "focal/expr.hpp"
#include "focal/mvector.hpp"
#include "focal/taylor.hpp"

namespace focal {

enum class Ambient { R31, S21, S31 };

std::string_view to_string(Ambient a);
Ambient parse_ambient(std::string_view s);
int ambient_dim(Ambient a);
bool is_de_sitter(Ambient a);

struct Domain {
  double lo = 0.0;
  double hi = 1.0;
  double width() const { return hi - lo; }
  bool contains(double t) const { return t >= lo && t <= hi; }
};

/// A parsed parametric curve: one expression per coordinate.
struct CurveDef {
  std::vector<ExprPtr> components;
  Ambient ambient = Ambient::R31;
  Domain domain;

  int dim() const { return static_cast<int>(components.size()); }
};

/// Derivatives d^0 ... d^order of one scalar component (plain, not divided
/// by factorials).
struct Jet {
  int order = 0;
  std::vector<double> d;
};

/// Parses the line-based curve-file format (space, x1..x4, domain).
CurveDef parse_curve(std::string_view text);
CurveDef load_curve(const std::string& path);
/// Curve-file text for `def`; parse_curve(format_curve(def)) reproduces it.
std::string format_curve(const CurveDef& def);

/// Builds a definition from component expression strings.
CurveDef make_curve(Ambient ambient, const std::vector<std::string>& components, Domain domain);

/// gamma o phi, with phi given as an expression in t and the new domain.
CurveDef reparametrize(const CurveDef& def, const ExprPtr& phi, Domain new_domain);

/// Per-component jets at t, order <= kMaxJetOrder.
std::vector<Jet> eval_jet(const CurveDef& def, double t, int order);
/// The curve as a vector of Taylor series about t.
SeriesVec curve_series(const CurveDef& def, double t, int order);
/// d^k gamma / dt^k for k = 0..order.
std::vector<MVector> curve_derivatives(const CurveDef& def, double t, int order);
MVector curve_point(const CurveDef& def, double t);

/// Converts per-component jets into derivative vectors.
std::vector<MVector> jets_to_vectors(const std::vector<Jet>& jets);

struct SphereCheck {
  bool on_sphere = false;
  double worst_residual = 0.0;
  double worst_t = 0.0;
};

/// Samples |<gamma, gamma> - 1| on a uniform grid over the domain.
SphereCheck validate_on_sphere(const CurveDef& def, int sample_count = 1001, double tol = 1e-9);

/// Analysis handle: the definition plus per-curve data shared by the
/// arc-length machinery (the guard-band threshold). Immutable and cheap to copy.
class Curve {
 public:
  /// `guard_scale` is the fraction of the domain-median speed below which
  /// arc-length evaluation is refused.
  explicit Curve(CurveDef def, double guard_scale = 1e-4);

  const CurveDef& def() const { return *def_; }
  Ambient ambient() const { return def_->ambient; }
  Domain domain() const { return def_->domain; }
  int dim() const { return def_->dim(); }
  double median_speed() const { return median_speed_; }
  double guard_threshold() const { return guard_scale_ * median_speed_; }
  double guard_scale() const { return guard_scale_; }

  SeriesVec series(double t, int order) const { return curve_series(*def_, t, order); }
  std::vector<MVector> derivatives(double t, int order) const {
    return curve_derivatives(*def_, t, order);
  }
  MVector point(double t) const { return curve_point(*def_, t); }

 private:
  std::shared_ptr<const CurveDef> def_;
  double guard_scale_;
  double median_speed_ = 0.0;
};

}  // namespace focal
