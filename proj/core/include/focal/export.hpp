#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "focal/curve.hpp"
#include "focal/sample.hpp"

namespace focal {

enum class Projection { Drop4, Stereo };

Projection parse_projection(std::string_view s);

/// Maps an S^3_1 point to R^3: drop the last coordinate, or project
/// stereographically from the pole e4. Three-vectors pass through unchanged.
std::optional<MVector> project(const MVector& p, Projection mode);

struct VertexAttr {
  double param = 0.0;
  double mu = 0.0;
  int branch = 0;
  MetricClass metric = MetricClass::Undefined;
  SingClass sing;
  double det_gram = 0.0;
  double sphere_residual = 0.0;  // |<x,x> - 1|, zero in R^3_1
};

/// Vertices (already projected to R^3), faces/polylines with 0-based indices
/// and one attribute record per vertex.
struct MeshBundle {
  std::vector<MVector> vertices;
  std::vector<std::vector<int>> faces;
  std::vector<std::vector<int>> lines;
  std::vector<VertexAttr> attrs;
  int holes = 0;  // grid cells whose sample failed
};

struct GridSpec {
  int n = 64;  // along the curve parameter
  int m = 64;  // along mu
  double param_lo = 0.0;
  double param_hi = 1.0;
  double mu_lo = -1.0;
  double mu_hi = 1.0;
};

/// Samples the focal set of `curve` in the given chart on a regular grid.
/// R^3_1 and S^3_1 give surfaces (quads); S^2_1 gives the two focal-curve
/// branches as polylines. Samples that raise a numeric error become holes.
MeshBundle focal_mesh(const Curve& curve, Chart chart, const GridSpec& grid, Projection projection,
                      double tol = kDefaultTol);

/// %.17g.
std::string format_real(double x);

void write_obj(std::ostream& os, const MeshBundle& mesh);
void write_attrs_csv(std::ostream& os, const MeshBundle& mesh);

/// Minimal CSV emitter: comma-separated, LF line endings, reals at 17 significant digits.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const std::vector<std::string>& header);

  CsvWriter& field(double x);
  CsvWriter& field(int x);
  CsvWriter& field(bool x);
  CsvWriter& field(std::string_view s);
  CsvWriter& field(const char* s) { return field(std::string_view(s)); }
  void end_row();

 private:
  void sep();

  std::ostream& os_;
  std::size_t columns_;
  std::size_t in_row_ = 0;
};

}  // namespace focal
