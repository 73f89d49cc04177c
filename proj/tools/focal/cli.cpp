#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "focal/causal.hpp"
#include "focal/errors.hpp"
#include "focal/export.hpp"
#include "focal/focal_desitter.hpp"
#include "focal/focal_r31.hpp"
#include "focal/frenet.hpp"
#include "focal/singularity.hpp"
#include "focal/verify.hpp"
#include "json.hpp"

namespace focal::cli {

namespace {

const std::vector<std::string> kCommands = {"lightlike", "arcs",     "frame", "focal", "cuspidal",
                                            "bifurcation", "classify", "ld",    "verify"};

struct Options {
  std::string command;
  std::string curve_file;
  std::string space;
  std::string chart = "frenet";
  std::vector<int> grid;
  std::vector<double> s_range;
  std::vector<double> mu_range;
  double tol = kDefaultTol;
  double guard = 1e-4;
  std::string projection = "drop4";
  std::string out;
  std::string attrs;
  std::optional<double> at;
  std::vector<double> v;
  std::string suite;
};

struct Context {
  const Options& opt;
  Curve curve;
  std::ostream& err;

  const CurveDef& def() const { return curve.def(); }
  int grid_n(int fallback) const { return opt.grid.empty() ? fallback : opt.grid[0]; }
  int grid_m(int fallback) const { return opt.grid.size() < 2 ? fallback : opt.grid[1]; }
  double s_lo() const { return opt.s_range.empty() ? def().domain.lo : opt.s_range[0]; }
  double s_hi() const { return opt.s_range.empty() ? def().domain.hi : opt.s_range[1]; }
  double mu_lo(double fallback) const { return opt.mu_range.empty() ? fallback : opt.mu_range[0]; }
  double mu_hi(double fallback) const { return opt.mu_range.empty() ? fallback : opt.mu_range[1]; }
};

double axis(double lo, double hi, int i, int n) {
  if (n == 1) return 0.5 * (lo + hi);
  return i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
}

std::string_view kind_name(CausalType c) {
  switch (c) {
    case CausalType::Spacelike: return "spacelike";
    case CausalType::Timelike: return "timelike";
    case CausalType::Lightlike: return "lightlike";
  }
  return "?";
}

std::vector<std::string> with_coords(std::vector<std::string> head, const std::string& prefix, int dim,
                                     std::vector<std::string> tail = {}) {
  for (int i = 1; i <= dim; ++i) head.push_back(prefix + std::to_string(i));
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

void put(CsvWriter& w, const MVector& v) {
  for (int i = 0; i < v.dim(); ++i) w.field(v[i]);
}

void write_output(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + opt.out + "'");
  f << text;
}

void note_skipped(const Context& c, int skipped, std::string_view what) {
  if (skipped > 0) c.err << "focal " << c.opt.command << ": skipped " << skipped << ' ' << what << '\n';
}

int cmd_lightlike(const Context& c, std::ostream& os) {
  ScanOptions scan;
  scan.tol = c.opt.tol;
  const auto pts = find_lightlike_points(c.def(), scan);
  const auto arcs = split_arcs(c.def(), pts, c.opt.tol);
  CsvWriter w(os, {"t_star", "omega_value", "certified", "arc_kind_left", "arc_kind_right"});
  for (const auto& p : pts) {
    std::string left = "none", right = "none";
    for (const auto& a : arcs) {
      if (a.hi == p.t_star) left = kind_name(a.kind);
      if (a.lo == p.t_star) right = kind_name(a.kind);
    }
    w.field(p.t_star).field(p.omega_value).field(p.certified).field(left).field(right).end_row();
  }
  return kOk;
}

int cmd_arcs(const Context& c, std::ostream& os) {
  ScanOptions scan;
  scan.tol = c.opt.tol;
  const auto arcs = split_arcs(c.def(), find_lightlike_points(c.def(), scan), c.opt.tol);
  CsvWriter w(os, {"lo", "hi", "kind"});
  for (const auto& a : arcs) w.field(a.lo).field(a.hi).field(kind_name(a.kind)).end_row();
  return kOk;
}

int cmd_frame(const Context& c, std::ostream& os) {
  const int n = c.grid_n(64);
  const int dim = c.def().dim();
  int skipped = 0;
  switch (c.curve.ambient()) {
    case Ambient::R31: {
      auto head = with_coords({"t", "ds_dt"}, "x", 3);
      head = with_coords(head, "t", 3);
      head = with_coords(head, "n", 3);
      head = with_coords(head, "b", 3, {"k", "dk_ds", "tau", "eps", "delta", "tau_fd"});
      CsvWriter w(os, head);
      for (int i = 0; i < n; ++i) {
        try {
          const FrameR31 f = frame_r31(c.curve, axis(c.s_lo(), c.s_hi(), i, n), c.opt.tol);
          w.field(f.param).field(f.ds_dt);
          put(w, f.point);
          put(w, f.tangent);
          put(w, f.normal);
          put(w, f.binormal);
          w.field(f.k).field(f.dk).field(f.tau).field(f.eps).field(f.delta).field(f.tau_fd).end_row();
        } catch (const NumericError&) {
          ++skipped;
        }
      }
      break;
    }
    case Ambient::S21: {
      auto head = with_coords({"t", "ds_dt"}, "x", 3);
      head = with_coords(head, "t", 3);
      head = with_coords(head, "n", 3, {"kg", "dkg_ds", "eps", "delta"});
      CsvWriter w(os, head);
      for (int i = 0; i < n; ++i) {
        try {
          const FrameS21 f = frame_s21(c.curve, axis(c.s_lo(), c.s_hi(), i, n), c.opt.tol);
          w.field(f.param).field(f.ds_dt);
          put(w, f.point);
          put(w, f.tangent);
          put(w, f.normal);
          w.field(f.kg).field(f.dkg).field(f.eps).field(f.delta).end_row();
        } catch (const NumericError&) {
          ++skipped;
        }
      }
      break;
    }
    case Ambient::S31: {
      auto head = with_coords({"t", "ds_dt", "kind"}, "x", dim);
      head = with_coords(head, "t", dim);
      head = with_coords(head, "n", dim);
      head = with_coords(head, "e", dim, {"curvature", "dcurvature_ds", "torsion", "delta"});
      CsvWriter w(os, head);
      for (int i = 0; i < n; ++i) {
        try {
          const FrameS31 f = frame_s31(c.curve, axis(c.s_lo(), c.s_hi(), i, n), c.opt.tol);
          w.field(f.param).field(f.ds_dt).field(f.kind == S31Kind::SpacelikeCurve ? "spacelike" : "timelike");
          put(w, f.point);
          put(w, f.tangent);
          put(w, f.normal);
          put(w, f.binormal);
          w.field(f.curvature).field(f.dcurvature).field(f.torsion).field(f.delta).end_row();
        } catch (const NumericError&) {
          ++skipped;
        }
      }
      break;
    }
  }
  note_skipped(c, skipped, "samples inside the guard band or at degenerate frames");
  return kOk;
}

Chart parse_chart(const std::string& s) {
  if (s == "frenet") return Chart::Frenet;
  if (s == "lightlike") return Chart::Lightlike;
  throw UsageError("unknown chart '" + s + "' (expected frenet or lightlike)");
}

int cmd_focal(const Context& c, std::ostream& os) {
  GridSpec g;
  g.n = c.grid_n(64);
  g.m = c.grid_m(64);
  g.param_lo = c.s_lo();
  g.param_hi = c.s_hi();
  g.mu_lo = c.mu_lo(-1.0);
  g.mu_hi = c.mu_hi(1.0);
  const MeshBundle mesh = focal_mesh(c.curve, parse_chart(c.opt.chart), g, parse_projection(c.opt.projection),
                                     c.opt.tol);
  std::ostringstream obj, csv;
  write_obj(obj, mesh);
  write_attrs_csv(csv, mesh);
  if (c.opt.out.empty()) {
    os << obj.str();
  } else {
    std::ofstream f(c.opt.out, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + c.opt.out + "'");
    f << obj.str();
  }
  std::string attrs = c.opt.attrs;
  if (attrs.empty() && !c.opt.out.empty())
    attrs = std::filesystem::path(c.opt.out).replace_extension(".attrs.csv").string();
  if (!attrs.empty()) {
    std::ofstream f(attrs, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + attrs + "'");
    f << csv.str();
  }
  c.err << "focal focal: " << mesh.vertices.size() << " vertices, " << mesh.faces.size() << " faces, "
        << mesh.lines.size() << " polylines, " << mesh.holes << " holes\n";
  return kOk;
}

int cmd_cuspidal(const Context& c, std::ostream& os) {
  const int n = c.grid_n(256);
  const int dim = c.def().dim();
  int skipped = 0;
  CsvWriter w(os, with_coords({"t", "mu", "branch"}, "x", dim, {"sing_class"}));
  switch (c.curve.ambient()) {
    case Ambient::R31:
      for (int i = 0; i < n; ++i) {
        try {
          const CuspidalSample s = cuspidal_curve(c.curve, axis(c.s_lo(), c.s_hi(), i, n), c.opt.tol);
          w.field(s.param).field(s.mu).field(0);
          put(w, s.point);
          w.field(to_string(s.sing)).end_row();
        } catch (const NumericError&) {
          ++skipped;
        }
      }
      break;
    case Ambient::S21: {
      const auto sp = spherical_singular_points(c.curve, c.s_lo(), c.s_hi(), c.grid_n(1024), c.opt.tol);
      if (sp.constant_kg) c.err << "focal cuspidal: geodesic curvature is constant; the focal curve is a point\n";
      for (double t : sp.params)
        for (int b : {1, -1}) {
          const FocalSample s = spherical_focal_curve(c.curve, t, b, c.opt.tol);
          w.field(t).field(0.0).field(b);
          put(w, s.point);
          w.field(to_string(s.sing)).end_row();
        }
      break;
    }
    case Ambient::S31:
      for (int i = 0; i < n; ++i)
        for (int b : {1, -1}) {
          try {
            const FocalSample s = spherical_cuspidal(c.curve, axis(c.s_lo(), c.s_hi(), i, n), b, c.opt.tol);
            w.field(s.param).field(s.mu).field(b);
            put(w, s.point);
            w.field(to_string(s.sing)).end_row();
          } catch (const NumericError&) {
            ++skipped;
          }
        }
      break;
  }
  note_skipped(c, skipped, "samples without a cuspidal point");
  return kOk;
}

void write_samples_header(CsvWriter*& w, std::ostream& os, int dim, std::optional<CsvWriter>& slot,
                          std::vector<std::string> lead) {
  slot.emplace(os, with_coords(std::move(lead), "x", dim, {"metric_class", "sing_class", "det_gram"}));
  w = &*slot;
}

void put_sample(CsvWriter& w, const FocalSample& s) {
  put(w, s.point);
  w.field(to_string(s.metric.cls)).field(to_string(s.sing)).field(s.metric.gram.det()).end_row();
}

int cmd_bifurcation(const Context& c, std::ostream& os) {
  const int n = c.grid_n(64);
  const int m = c.grid_m(64);
  const int dim = c.def().dim();
  int skipped = 0;
  std::optional<CsvWriter> slot;
  CsvWriter* w = nullptr;
  write_samples_header(w, os, dim, slot, {"t", "mu", "branch"});
  for (int i = 0; i < n; ++i) {
    const double t = axis(c.s_lo(), c.s_hi(), i, n);
    if (c.curve.ambient() == Ambient::S21) {
      for (int b : {1, -1}) {
        try {
          const FocalSample s = spherical_bif_lightlike(c.def(), t, b, c.opt.tol);
          w->field(t).field(s.mu).field(b);
          put_sample(*w, s);
        } catch (const NumericError&) {
          ++skipped;
        }
      }
      continue;
    }
    for (int j = 0; j < m; ++j) {
      const double mu = axis(c.mu_lo(-1.0), c.mu_hi(1.0), j, m);
      const std::vector<int> branches =
          c.curve.ambient() == Ambient::R31 ? std::vector<int>{0} : std::vector<int>{1, -1};
      for (int b : branches) {
        try {
          const FocalSample s = c.curve.ambient() == Ambient::R31
                                    ? bif_lightlike_chart(c.def(), t, mu, c.opt.tol)
                                    : beta_lambda(c.def(), t, mu, b, c.opt.tol).sample;
          w->field(t).field(mu).field(b);
          put_sample(*w, s);
        } catch (const NumericError&) {
          ++skipped;
        }
      }
    }
  }
  note_skipped(c, skipped, "samples outside the chart domain");
  return kOk;
}

int cmd_classify(const Context& c, std::ostream& os) {
  if (!c.opt.at) throw UsageError("classify needs --at t");
  const int dim = c.def().dim();
  if (static_cast<int>(c.opt.v.size()) != dim)
    throw UsageError("classify needs --v with " + std::to_string(dim) + " coordinates");
  MVector v = MVector::zero(dim);
  for (int i = 0; i < dim; ++i) v[i] = c.opt.v[static_cast<std::size_t>(i)];
  const double t = *c.opt.at;
  if (!c.def().domain.contains(t)) throw UsageError("--at lies outside the curve domain");
  const DistanceJet j = dist_jet(c.def(), t, v);
  const SingClass sc = classify(c.def(), t, v, c.opt.tol);
  std::string model = "none";
  try {
    model = std::string(local_model(sc));
  } catch (const UsageError&) {
  }
  std::string contact = "undefined";
  try {
    contact = std::string(to_string(contact_sphere_type(c.def(), t, v, c.opt.tol)));
  } catch (const DegenerateError&) {
  }
  os << "sing_class: " << to_string(sc) << '\n';
  os << "local_model: " << model << '\n';
  os << "contact_sphere: " << contact << '\n';
  os << "scale: " << format_real(j.scale) << '\n';
  for (std::size_t p = 0; p < j.f.size(); ++p) os << 'f' << p << ": " << format_real(j.f[p]) << '\n';
  return kOk;
}

int cmd_ld(const Context& c, std::ostream& os) {
  if (c.curve.ambient() == Ambient::S21) throw UsageError("ld needs an R31 or S31 curve");
  const int dim = c.def().dim();
  ScanOptions scan;
  scan.tol = c.opt.tol;
  std::vector<std::string> head = with_coords({"t_star", "mu", "branch"}, "x", dim, {"metric_class", "det_gram"});
  head = with_coords(head, "l", dim);
  CsvWriter w(os, head);
  int certified = 0;
  for (const auto& p : find_lightlike_points(c.def(), scan)) {
    if (!p.certified) continue;
    ++certified;
    std::vector<std::pair<int, LdExtraction>> runs;
    if (c.curve.ambient() == Ambient::R31) {
      runs.emplace_back(0, ld_extract(c.def(), p.t_star, c.mu_lo(-0.45), c.mu_hi(0.45), c.grid_n(91), c.opt.tol));
    } else {
      for (int b : {1, -1}) runs.emplace_back(b, s31_ld_extract(c.def(), p.t_star, c.grid_n(99), b, c.opt.tol));
    }
    for (const auto& [b, ld] : runs) {
      for (const auto& s : ld.samples) {
        w.field(p.t_star).field(s.mu).field(b);
        put(w, s.point);
        w.field(to_string(s.metric.cls)).field(s.metric.gram.det());
        for (int i = 0; i < dim; ++i) {
          if (s.metric.lightlike_direction)
            w.field((*s.metric.lightlike_direction)[i]);
          else
            w.field(std::string_view{});
        }
        w.end_row();
      }
      c.err << "focal ld: t* = " << format_real(p.t_star) << " branch " << b << ": " << ld.samples.size()
            << " samples, " << ld.non_degenerate << " non-degenerate";
      if (ld.line_residual) c.err << ", line residual " << format_real(*ld.line_residual);
      c.err << '\n';
    }
  }
  if (certified == 0) c.err << "focal ld: no certified lightlike point\n";
  return kOk;
}

int cmd_verify(const Context& c, std::ostream& os) {
  if (c.opt.suite.empty()) throw UsageError("verify needs --suite");
  VerifyOptions vo;
  vo.tol = c.opt.tol;
  if (!c.opt.grid.empty()) vo.grid_n = c.grid_n(20);
  vo.grid_m = c.grid_m(vo.grid_m);
  if (!c.opt.mu_range.empty()) {
    vo.mu_lo = c.opt.mu_range[0];
    vo.mu_hi = c.opt.mu_range[1];
  }
  const VerifyReport r = run_suite(c.opt.suite, c.curve, c.opt.curve_file, vo);
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["curve"] = r.curve;
  j["assertions"] = nlohmann::ordered_json::array();
  for (const auto& a : r.assertions) {
    nlohmann::ordered_json e;
    e["name"] = a.name;
    e["residual"] = a.residual;
    e["tol"] = a.tol;
    e["pass"] = a.pass;
    j["assertions"].push_back(std::move(e));
  }
  os << j.dump(2) << '\n';
  if (const Assertion* f = r.first_failure()) {
    c.err << "focal verify: FAIL " << f->name << " residual " << format_real(f->residual) << " > tol "
          << format_real(f->tol) << '\n';
    return kVerifyFailed;
  }
  c.err << "focal verify: PASS " << r.assertions.size() << " assertions\n";
  return kOk;
}

void validate(const Options& o) {
  if (!o.grid.empty()) {
    for (int g : o.grid)
      if (g < 1) throw UsageError("--grid sizes must be positive");
  }
  if (!o.s_range.empty() && !(o.s_range[0] < o.s_range[1])) throw UsageError("--s-range needs a < b");
  if (!o.mu_range.empty() && !(o.mu_range[0] <= o.mu_range[1])) throw UsageError("--mu-range needs a <= b");
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  if (!(o.guard > 0.0)) throw UsageError("--guard must be positive");
  if (o.chart != "frenet" && o.chart != "lightlike") throw UsageError("--chart must be frenet or lightlike");
  parse_projection(o.projection);
  if (o.command == "verify" && !o.suite.empty() && !is_suite(o.suite))
    throw UsageError("unknown suite '" + o.suite + "'");
}

int dispatch(const Options& o, std::ostream& out, std::ostream& err) {
  validate(o);
  CurveDef def = load_curve(o.curve_file);
  if (!o.space.empty() && parse_ambient(o.space) != def.ambient)
    throw UsageError("--space " + o.space + " does not match the curve file (space = " +
                     std::string(to_string(def.ambient)) + ")");
  if (is_de_sitter(def.ambient)) {
    const SphereCheck sc = validate_on_sphere(def);
    if (!sc.on_sphere)
      throw DomainError("curve leaves the unit pseudo-sphere: residual " + format_real(sc.worst_residual) +
                        " at t = " + format_real(sc.worst_t));
  }
  if (!o.s_range.empty() && (!def.domain.contains(o.s_range[0]) || !def.domain.contains(o.s_range[1])))
    throw UsageError("--s-range must lie inside the curve domain");
  Context c{o, Curve(std::move(def), o.guard), err};

  std::ostringstream buf;
  int code = kOk;
  if (o.command == "lightlike") code = cmd_lightlike(c, buf);
  else if (o.command == "arcs") code = cmd_arcs(c, buf);
  else if (o.command == "frame") code = cmd_frame(c, buf);
  else if (o.command == "focal") return cmd_focal(c, out);
  else if (o.command == "cuspidal") code = cmd_cuspidal(c, buf);
  else if (o.command == "bifurcation") code = cmd_bifurcation(c, buf);
  else if (o.command == "classify") code = cmd_classify(c, buf);
  else if (o.command == "ld") code = cmd_ld(c, buf);
  else if (o.command == "verify") code = cmd_verify(c, buf);
  write_output(o, buf.str(), out);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Focal and bifurcation sets of curves in Minkowski 3-space and de Sitter space", "focal"};
  Options o;
  std::string commands;
  for (const auto& c : kCommands) commands += (commands.empty() ? "" : "|") + c;
  app.add_option("command", o.command, commands)->required()->check(CLI::IsMember(kCommands));
  app.add_option("curve-file", o.curve_file, "Curve file")->required();
  app.add_option("--space", o.space, "Expected ambient space: R31, S21 or S31");
  app.add_option("--chart", o.chart, "frenet or lightlike");
  app.add_option("--grid", o.grid, "Grid sizes N [M]")->expected(1, 2);
  app.add_option("--s-range", o.s_range, "Curve parameter range a b")->expected(2);
  app.add_option("--mu-range", o.mu_range, "mu range a b")->expected(2);
  app.add_option("--tol", o.tol, "Relative zero tolerance");
  app.add_option("--guard", o.guard, "Guard band as a fraction of the median speed");
  app.add_option("--projection", o.projection, "drop4 or stereo");
  app.add_option("--out", o.out, "Output path (stdout when omitted)");
  app.add_option("--attrs", o.attrs, "Attribute CSV path for the focal command");
  app.add_option("--at", o.at, "Curve parameter for classify");
  app.add_option("--v", o.v, "Point coordinates for classify")->expected(3, 4);
  app.add_option("--suite", o.suite, "Verification suite");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "focal: " << e.what() << '\n';
    return kUsage;
  }

  try {
    return dispatch(o, out, err);
  } catch (const ParseError& e) {
    err << "focal: parse error in " << o.curve_file << ": " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "focal: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericError& e) {
    err << "focal: " << e.what() << '\n';
    return kNumeric;
  } catch (const Error& e) {
    err << "focal: " << e.what() << '\n';
    return kNumeric;
  }
}

}  // namespace focal::cli
