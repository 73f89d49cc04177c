#include "focal/curve.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "focal/errors.hpp"

namespace focal {

std::string_view to_string(Ambient a) {
  switch (a) {
    case Ambient::R31: return "R31";
    case Ambient::S21: return "S21";
    case Ambient::S31: return "S31";
  }
  return "?";
}

Ambient parse_ambient(std::string_view s) {
  if (s == "R31") return Ambient::R31;
  if (s == "S21") return Ambient::S21;
  if (s == "S31") return Ambient::S31;
  throw UsageError("unknown space '" + std::string(s) + "' (expected R31, S21 or S31)");
}

int ambient_dim(Ambient a) { return a == Ambient::S31 ? 4 : 3; }

bool is_de_sitter(Ambient a) { return a != Ambient::R31; }

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

double parse_real(const std::string& tok, int line, int column) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (tok.empty() || end != tok.c_str() + tok.size() || !std::isfinite(v))
    throw ParseError("malformed number '" + tok + "'", line, column);
  return v;
}

}  // namespace

CurveDef parse_curve(std::string_view text) {
  struct Entry {
    std::string value;
    int line;
    int column;  // 1-based column where value starts
  };
  std::map<std::string, Entry> entries;
  int line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (trim(raw).empty()) continue;
    const auto eq = raw.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", line_no, 1);
    const std::string key = trim(raw.substr(0, eq));
    std::size_t vstart = eq + 1;
    while (vstart < raw.size() && std::isspace(static_cast<unsigned char>(raw[vstart]))) ++vstart;
    const std::string value = trim(raw.substr(eq + 1));
    if (key != "space" && key != "domain" && key != "x1" && key != "x2" && key != "x3" &&
        key != "x4")
      throw ParseError("unknown key '" + key + "'", line_no, 1);
    if (entries.count(key)) throw ParseError("duplicate key '" + key + "'", line_no, 1);
    if (value.empty()) throw ParseError("empty value for '" + key + "'", line_no, static_cast<int>(vstart) + 1);
    entries[key] = Entry{value, line_no, static_cast<int>(vstart) + 1};
  }
  line_no = std::max(line_no, 1);

  auto require = [&](const std::string& key) -> const Entry& {
    auto it = entries.find(key);
    if (it == entries.end()) throw ParseError("missing key '" + key + "'", line_no, 1);
    return it->second;
  };

  CurveDef def;
  const Entry& space = require("space");
  try {
    def.ambient = parse_ambient(space.value);
  } catch (const UsageError& e) {
    throw ParseError(e.what(), space.line, space.column);
  }
  const int dim = ambient_dim(def.ambient);
  for (int i = 1; i <= 4; ++i) {
    const std::string key = "x" + std::to_string(i);
    auto it = entries.find(key);
    if (i <= dim) {
      const Entry& e = require(key);
      def.components.push_back(parse_expr(e.value, e.line, e.column - 1));
    } else if (it != entries.end()) {
      throw ParseError("space " + std::string(to_string(def.ambient)) + " takes " +
                           std::to_string(dim) + " components, found '" + key + "'",
                       it->second.line, 1);
    }
  }

  const Entry& dom = require("domain");
  std::istringstream in(dom.value);
  std::string a, b, extra;
  in >> a >> b;
  if (a.empty() || b.empty() || (in >> extra))
    throw ParseError("domain needs exactly two numbers", dom.line, dom.column);
  def.domain.lo = parse_real(a, dom.line, dom.column);
  def.domain.hi = parse_real(b, dom.line, dom.column);
  if (!(def.domain.lo < def.domain.hi))
    throw ParseError("domain must satisfy a < b", dom.line, dom.column);
  return def;
}

CurveDef load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open curve file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_curve(ss.str());
}

std::string format_curve(const CurveDef& def) {
  std::ostringstream out;
  out << "space = " << to_string(def.ambient) << '\n';
  for (int i = 0; i < def.dim(); ++i) out << 'x' << i + 1 << " = " << to_string(*def.components[i]) << '\n';
  char buf[96];
  std::snprintf(buf, sizeof buf, "domain = %.17g %.17g\n", def.domain.lo, def.domain.hi);
  out << buf;
  return out.str();
}

CurveDef make_curve(Ambient ambient, const std::vector<std::string>& components, Domain domain) {
  if (static_cast<int>(components.size()) != ambient_dim(ambient))
    throw UsageError("wrong component count for space " + std::string(to_string(ambient)));
  if (!(domain.lo < domain.hi)) throw UsageError("domain must satisfy a < b");
  CurveDef def;
  def.ambient = ambient;
  def.domain = domain;
  for (std::size_t i = 0; i < components.size(); ++i)
    def.components.push_back(parse_expr(components[i], static_cast<int>(i) + 1));
  return def;
}

CurveDef reparametrize(const CurveDef& def, const ExprPtr& phi, Domain new_domain) {
  CurveDef r = def;
  r.domain = new_domain;
  for (auto& c : r.components) c = substitute(c, phi);
  return r;
}

std::vector<Jet> eval_jet(const CurveDef& def, double t, int order) {
  if (order < 0 || order > kMaxJetOrder)
    throw UsageError("jet order must lie in [0, " + std::to_string(kMaxJetOrder) + "]");
  std::vector<Jet> jets;
  jets.reserve(def.components.size());
  for (const auto& c : def.components) {
    const Series s = eval_series(*c, t, order);
    Jet j;
    j.order = order;
    j.d.resize(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) j.d[static_cast<std::size_t>(k)] = s.derivative(k);
    jets.push_back(std::move(j));
  }
  return jets;
}

SeriesVec curve_series(const CurveDef& def, double t, int order) {
  SeriesVec v(def.dim(), order);
  for (int i = 0; i < def.dim(); ++i) v[i] = eval_series(*def.components[static_cast<std::size_t>(i)], t, order);
  return v;
}

std::vector<MVector> curve_derivatives(const CurveDef& def, double t, int order) {
  const SeriesVec s = curve_series(def, t, order);
  std::vector<MVector> out;
  for (int k = 0; k <= order; ++k) out.push_back(s.derivative(k));
  return out;
}

MVector curve_point(const CurveDef& def, double t) { return curve_series(def, t, 0).value(); }

std::vector<MVector> jets_to_vectors(const std::vector<Jet>& jets) {
  if (jets.size() != 3 && jets.size() != 4) throw UsageError("need 3 or 4 component jets");
  const int order = jets.front().order;
  std::vector<MVector> out;
  for (int k = 0; k <= order; ++k) {
    MVector v = MVector::zero(static_cast<int>(jets.size()));
    for (std::size_t i = 0; i < jets.size(); ++i) v[static_cast<int>(i)] = jets[i].d[static_cast<std::size_t>(k)];
    out.push_back(v);
  }
  return out;
}

SphereCheck validate_on_sphere(const CurveDef& def, int sample_count, double tol) {
  if (!is_de_sitter(def.ambient)) throw UsageError("validate_on_sphere needs an S21 or S31 curve");
  if (sample_count < 2) throw UsageError("validate_on_sphere needs at least two samples");
  SphereCheck r;
  r.worst_t = def.domain.lo;
  for (int i = 0; i < sample_count; ++i) {
    const double t = def.domain.lo + def.domain.width() * i / (sample_count - 1);
    const MVector p = curve_point(def, t);
    const double res = std::abs(mdot(p, p) - 1.0);
    if (res > r.worst_residual || i == 0) {
      r.worst_residual = res;
      r.worst_t = t;
    }
  }
  r.on_sphere = r.worst_residual <= tol;
  return r;
}

Curve::Curve(CurveDef def, double guard_scale)
    : def_(std::make_shared<const CurveDef>(std::move(def))), guard_scale_(guard_scale) {
  if (static_cast<int>(def_->components.size()) != ambient_dim(def_->ambient))
    throw UsageError("component count does not match the ambient space");
  constexpr int kSamples = 257;
  std::vector<double> speeds;
  speeds.reserve(kSamples);
  for (int i = 0; i < kSamples; ++i) {
    const double t = def_->domain.lo + def_->domain.width() * i / (kSamples - 1);
    try {
      speeds.push_back(mnorm(curve_series(*def_, t, 1).derivative(1)));
    } catch (const NumericError&) {
      // singular sample: leave it out of the median
    }
  }
  if (!speeds.empty()) {
    auto mid = speeds.begin() + static_cast<std::ptrdiff_t>(speeds.size() / 2);
    std::nth_element(speeds.begin(), mid, speeds.end());
    median_speed_ = *mid;
  }
}

}  // namespace focal
