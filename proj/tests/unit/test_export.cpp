#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "focal/errors.hpp"
#include "focal/export.hpp"
#include "oracles.hpp"

using namespace focal;
using namespace focal::oracle;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

MeshBundle circle_mesh(int n, int m, Projection p) {
  const Curve curve(load_fixture("s31_circle.curve"));
  GridSpec g;
  g.n = n;
  g.m = m;
  g.param_lo = -0.5;
  g.param_hi = 0.5;
  g.mu_lo = -0.7;
  g.mu_hi = 0.7;
  return focal_mesh(curve, Chart::Frenet, g, p);
}

}  // namespace

TEST(Export, FormatRealRoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, std::sqrt(2.0)}) {
    const std::string s = format_real(x);
    EXPECT_EQ(std::stod(s), x) << s;
  }
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
}

TEST(Export, CsvWriter) {
  std::ostringstream os;
  CsvWriter w(os, {"a", "b", "c"});
  w.field(0.5).field(3).field("x,y").end_row();
  w.field(true).field(false).field(std::string_view("q\"t")).end_row();
  EXPECT_EQ(os.str(), "a,b,c\n0.5,3,\"x,y\"\ntrue,false,\"q\"\"t\"\n");
  CsvWriter short_row(os, {"a", "b"});
  short_row.field(1);
  EXPECT_THROW(short_row.end_row(), UsageError);
}

TEST(Export, CircleMeshMatchesClosedForm) {
  const MeshBundle mesh = circle_mesh(16, 16, Projection::Drop4);
  EXPECT_EQ(mesh.vertices.size(), mesh.attrs.size());
  EXPECT_EQ(mesh.holes, 0);
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    const VertexAttr& a = mesh.attrs[i];
    EXPECT_LE(max_abs_diff(mesh.vertices[i], MVector{0, 0, std::sqrt(2.0) * a.mu}), 1e-9);
    EXPECT_LE(a.sphere_residual, 1e-9);
  }
  for (const auto& f : mesh.faces) {
    ASSERT_EQ(f.size(), 4u);
    for (int idx : f) {
      EXPECT_GE(idx, 0);
      EXPECT_LT(idx, static_cast<int>(mesh.vertices.size()));
    }
  }
}

TEST(Export, StereographicProjection) {
  EXPECT_FALSE(project(MVector{0, 0, 0, 1}, Projection::Stereo).has_value());
  const auto p = project(MVector{1, 2, 3, -1}, Projection::Stereo);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(*p, (MVector{0.5, 1, 1.5}));
  EXPECT_EQ(*project(MVector{1, 2, 3}, Projection::Stereo), (MVector{1, 2, 3}));
  EXPECT_THROW(parse_projection("orthographic"), UsageError);
}

TEST(Export, ObjAndAttributeFiles) {
  const MeshBundle mesh = circle_mesh(4, 3, Projection::Drop4);
  std::ostringstream obj, csv;
  write_obj(obj, mesh);
  write_attrs_csv(csv, mesh);
  const auto ol = lines_of(obj.str());
  std::size_t v = 0, f = 0;
  for (const auto& l : ol) {
    if (l.rfind("v ", 0) == 0) ++v;
    if (l.rfind("f ", 0) == 0) ++f;
  }
  EXPECT_EQ(v, mesh.vertices.size());
  EXPECT_EQ(f, mesh.faces.size());
  const auto cl = lines_of(csv.str());
  ASSERT_FALSE(cl.empty());
  EXPECT_EQ(cl[0], "index,s_or_t,mu,branch,metric_class,sing_class,det_gram,on_sphere_residual");
  EXPECT_EQ(cl.size(), mesh.vertices.size() + 1);
  EXPECT_EQ(csv.str().find('\r'), std::string::npos);
  EXPECT_EQ(obj.str().find('\r'), std::string::npos);
}

TEST(Export, Deterministic) {
  std::ostringstream a, b;
  write_obj(a, circle_mesh(8, 8, Projection::Stereo));
  write_obj(b, circle_mesh(8, 8, Projection::Stereo));
  EXPECT_EQ(a.str(), b.str());
}

TEST(Export, HolesAcrossLightlikePoint) {
  const Curve curve(load_fixture("r31_lightlike.curve"));
  GridSpec g;
  g.n = 21;
  g.m = 5;
  g.param_lo = -0.2;
  g.param_hi = 0.2;
  const MeshBundle frenet = focal_mesh(curve, Chart::Frenet, g, Projection::Drop4);
  EXPECT_GT(frenet.holes, 0);
  EXPECT_EQ(frenet.vertices.size() + static_cast<std::size_t>(frenet.holes), 21u * 5u);
  const MeshBundle lightlike = focal_mesh(curve, Chart::Lightlike, g, Projection::Drop4);
  EXPECT_EQ(lightlike.holes, 0);
}

TEST(Export, DeSitterPlaneGivesPolylines) {
  const Curve curve(load_fixture("s21_spiral.curve"));
  GridSpec g;
  g.n = 30;
  g.m = 7;
  g.param_lo = -0.9;
  g.param_hi = 0.9;
  const MeshBundle mesh = focal_mesh(curve, Chart::Frenet, g, Projection::Drop4);
  EXPECT_TRUE(mesh.faces.empty());
  EXPECT_EQ(mesh.lines.size(), 2u);
  EXPECT_EQ(mesh.vertices.size(), 60u);
}
