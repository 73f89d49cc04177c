#include "focal/export.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

#include "focal/errors.hpp"
#include "focal/focal_desitter.hpp"
#include "focal/focal_r31.hpp"

namespace focal {

Projection parse_projection(std::string_view s) {
  if (s == "drop4") return Projection::Drop4;
  if (s == "stereo") return Projection::Stereo;
  throw UsageError("unknown projection '" + std::string(s) + "' (expected drop4 or stereo)");
}

std::optional<MVector> project(const MVector& p, Projection mode) {
  if (p.dim() == 3) return p;
  if (mode == Projection::Drop4) return MVector{p[0], p[1], p[2]};
  const double den = 1.0 - p[3];
  if (std::abs(den) < 1e-12) return std::nullopt;
  return MVector{p[0] / den, p[1] / den, p[2] / den};
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

using Sampler = std::function<FocalSample(double param, double mu, int branch)>;

Sampler make_sampler(const Curve& curve, Chart chart, double tol) {
  const CurveDef& def = curve.def();
  switch (curve.ambient()) {
    case Ambient::R31:
      if (chart == Chart::Frenet)
        return [&curve, tol](double t, double mu, int) { return focal_surface(curve, t, mu, tol); };
      return [&def, tol](double t, double mu, int) { return bif_lightlike_chart(def, t, mu, tol); };
    case Ambient::S21:
      if (chart == Chart::Frenet)
        return [&curve, tol](double t, double, int b) { return spherical_focal_curve(curve, t, b, tol); };
      return [&def, tol](double t, double, int b) { return spherical_bif_lightlike(def, t, b, tol); };
    case Ambient::S31:
      if (chart == Chart::Frenet)
        return [&curve, tol](double t, double mu, int b) {
          return spherical_focal_surface(curve, t, mu, b, tol);
        };
      return [&def, tol](double t, double mu, int b) { return beta_lambda(def, t, mu, b, tol).sample; };
  }
  throw UsageError("unknown ambient space");
}

double axis_value(double lo, double hi, int i, int count) {
  if (count == 1) return 0.5 * (lo + hi);
  return i == count - 1 ? hi : lo + (hi - lo) * i / (count - 1);
}

}  // namespace

MeshBundle focal_mesh(const Curve& curve, Chart chart, const GridSpec& grid, Projection projection,
                      double tol) {
  if (grid.n < 1 || grid.m < 1) throw UsageError("grid sizes must be positive");
  if (!(grid.param_lo <= grid.param_hi) || !(grid.mu_lo <= grid.mu_hi))
    throw UsageError("grid ranges must satisfy lo <= hi");
  const Sampler sample = make_sampler(curve, chart, tol);
  const bool surface = curve.ambient() != Ambient::S21;
  const int m = surface ? grid.m : 1;
  const std::vector<int> branches =
      curve.ambient() == Ambient::R31 ? std::vector<int>{0} : std::vector<int>{1, -1};

  MeshBundle mesh;
  for (int branch : branches) {
    std::vector<int> index(static_cast<std::size_t>(grid.n * m), -1);
    for (int i = 0; i < grid.n; ++i) {
      const double p = axis_value(grid.param_lo, grid.param_hi, i, grid.n);
      for (int j = 0; j < m; ++j) {
        const double mu = surface ? axis_value(grid.mu_lo, grid.mu_hi, j, m) : 0.0;
        FocalSample s;
        try {
          s = sample(p, mu, branch == 0 ? 1 : branch);
        } catch (const NumericError&) {
          ++mesh.holes;
          continue;
        }
        const auto v = project(s.point, projection);
        if (!v) {
          ++mesh.holes;
          continue;
        }
        index[static_cast<std::size_t>(i * m + j)] = static_cast<int>(mesh.vertices.size());
        mesh.vertices.push_back(*v);
        VertexAttr a;
        a.param = p;
        a.mu = s.mu;
        a.branch = branch;
        a.metric = s.metric.cls;
        a.sing = s.sing;
        a.det_gram = s.metric.gram.det();
        if (curve.ambient() != Ambient::R31) a.sphere_residual = std::abs(mdot(s.point, s.point) - 1.0);
        mesh.attrs.push_back(a);
      }
    }
    auto at = [&](int i, int j) { return index[static_cast<std::size_t>(i * m + j)]; };
    if (surface) {
      for (int i = 0; i + 1 < grid.n; ++i)
        for (int j = 0; j + 1 < m; ++j) {
          const int a = at(i, j), b = at(i + 1, j), c = at(i + 1, j + 1), d = at(i, j + 1);
          if (a >= 0 && b >= 0 && c >= 0 && d >= 0) mesh.faces.push_back({a, b, c, d});
        }
    } else {
      std::vector<int> run;
      for (int i = 0; i < grid.n; ++i) {
        const int a = at(i, 0);
        if (a >= 0) {
          run.push_back(a);
          continue;
        }
        if (run.size() >= 2) mesh.lines.push_back(run);
        run.clear();
      }
      if (run.size() >= 2) mesh.lines.push_back(run);
    }
  }
  return mesh;
}

void write_obj(std::ostream& os, const MeshBundle& mesh) {
  os << "# focal mesh: " << mesh.vertices.size() << " vertices, " << mesh.faces.size() << " faces, "
     << mesh.lines.size() << " polylines\n";
  for (const auto& v : mesh.vertices)
    os << "v " << format_real(v[0]) << ' ' << format_real(v[1]) << ' ' << format_real(v[2]) << '\n';
  for (const auto& f : mesh.faces) {
    os << 'f';
    for (int i : f) os << ' ' << i + 1;
    os << '\n';
  }
  for (const auto& l : mesh.lines) {
    os << 'l';
    for (int i : l) os << ' ' << i + 1;
    os << '\n';
  }
}

void write_attrs_csv(std::ostream& os, const MeshBundle& mesh) {
  CsvWriter csv(os, {"index", "s_or_t", "mu", "branch", "metric_class", "sing_class", "det_gram",
                     "on_sphere_residual"});
  for (std::size_t i = 0; i < mesh.attrs.size(); ++i) {
    const VertexAttr& a = mesh.attrs[i];
    csv.field(static_cast<int>(i))
        .field(a.param)
        .field(a.mu)
        .field(a.branch)
        .field(to_string(a.metric))
        .field(to_string(a.sing))
        .field(a.det_gram)
        .field(a.sphere_residual);
    csv.end_row();
  }
}

CsvWriter::CsvWriter(std::ostream& os, const std::vector<std::string>& header)
    : os_(os), columns_(header.size()) {
  for (const auto& h : header) field(std::string_view(h));
  end_row();
}

void CsvWriter::sep() {
  if (in_row_ >= columns_) throw UsageError("CSV row has too many fields");
  if (in_row_++ > 0) os_ << ',';
}

CsvWriter& CsvWriter::field(double x) {
  sep();
  os_ << format_real(x);
  return *this;
}

CsvWriter& CsvWriter::field(int x) {
  sep();
  os_ << x;
  return *this;
}

CsvWriter& CsvWriter::field(bool x) {
  sep();
  os_ << (x ? "true" : "false");
  return *this;
}

CsvWriter& CsvWriter::field(std::string_view s) {
  sep();
  if (s.find_first_of(",\"\n") == std::string_view::npos) {
    os_ << s;
    return *this;
  }
  os_ << '"';
  for (char c : s) {
    if (c == '"') os_ << '"';
    os_ << c;
  }
  os_ << '"';
  return *this;
}

void CsvWriter::end_row() {
  if (in_row_ != columns_) throw UsageError("CSV row has " + std::to_string(in_row_) + " fields, expected " + std::to_string(columns_));
  os_ << '\n';
  in_row_ = 0;
}

}  // namespace focal
