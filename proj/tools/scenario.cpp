#include "scenario.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <set>

#include "defectforms/errors.hpp"
#include "defectforms/parse.hpp"

namespace defectforms::cli {
namespace {

struct Text {
  std::string_view s;
  int line, column;
};

Text trim(Text t) {
  while (!t.s.empty() && (t.s.front() == ' ' || t.s.front() == '\t')) {
    t.s.remove_prefix(1);
    ++t.column;
  }
  while (!t.s.empty() && (t.s.back() == ' ' || t.s.back() == '\t' || t.s.back() == '\r')) t.s.remove_suffix(1);
  return t;
}

[[noreturn]] void fail(const Text& at, const std::string& msg) { throw ParseError(msg, at.line, at.column); }

SourcePos pos(const Text& t) { return {t.line, t.column}; }

// "(a, b, c)" -> three trimmed parts
std::array<Text, 3> triple(const Text& t, bool parens) {
  Text body = t;
  if (parens) {
    if (body.s.size() < 2 || body.s.front() != '(' || body.s.back() != ')') fail(t, "expected '(a, b, c)'");
    body.s = body.s.substr(1, body.s.size() - 2);
    ++body.column;
  }
  std::vector<Text> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.s.size(); ++i) {
    char ch = i < body.s.size() ? body.s[i] : ',';
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(trim({body.s.substr(start, i - start), body.line, body.column + static_cast<int>(start)}));
      start = i + 1;
    }
  }
  if (parts.size() != 3) fail(t, "expected three comma-separated entries");
  for (const auto& p : parts)
    if (p.s.empty()) fail(p, "empty entry");
  return {parts[0], parts[1], parts[2]};
}

double parse_double(const Text& t) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(t.s.data(), t.s.data() + t.s.size(), v);
  if (ec != std::errc() || ptr != t.s.data() + t.s.size()) fail(t, "expected a number, got '" + std::string(t.s) + "'");
  return v;
}

long long parse_int(const Text& t, long long lo) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(t.s.data(), t.s.data() + t.s.size(), v);
  if (ec != std::errc() || ptr != t.s.data() + t.s.size()) fail(t, "expected an integer, got '" + std::string(t.s) + "'");
  if (v < lo) fail(t, "value must be at least " + std::to_string(lo));
  return v;
}

bool parse_bool(const Text& t) {
  if (t.s == "true") return true;
  if (t.s == "false") return false;
  fail(t, "expected true or false");
}

ScalarField scalar(const Text& t, const VariableTable& vars = coordinate_variables()) {
  return parse_scalar(t.s, vars, pos(t));
}

MultiPoly polynomial(const Text& t, const VariableTable& vars) {
  ScalarField f = scalar(t, vars);
  if (!f.is_polynomial()) fail(t, "expected a polynomial");
  return f.numerator();
}

const VariableTable& curve_vars() {
  static const VariableTable v{{"t", 0}};
  return v;
}

const VariableTable& patch_vars() {
  static const VariableTable v{{"u", 0}, {"v", 1}};
  return v;
}

// "name.i.j" -> (i, j) in 0..2; arity 1 or 2
std::vector<int> indices(const Text& key, std::string_view name, int arity) {
  std::vector<int> out;
  std::string_view rest = key.s.substr(name.size());
  for (int k = 0; k < arity; ++k) {
    if (rest.size() < 2 || rest[0] != '.' || rest[1] < '1' || rest[1] > '3') fail(key, "bad index in '" + std::string(key.s) + "'");
    out.push_back(rest[1] - '1');
    rest.remove_prefix(2);
  }
  if (!rest.empty()) fail(key, "bad index in '" + std::string(key.s) + "'");
  return out;
}

bool has_prefix(std::string_view key, std::string_view name) {
  return key.size() > name.size() && key.substr(0, name.size()) == name && key[name.size()] == '.';
}

const std::map<std::string, GeometryKind, std::less<>>& kinds() {
  static const std::map<std::string, GeometryKind, std::less<>> k{{"gauge", GeometryKind::Gauge},
                                                                  {"cayley", GeometryKind::Cayley},
                                                                  {"symmetric", GeometryKind::Symmetric},
                                                                  {"conformal", GeometryKind::Conformal},
                                                                  {"explicit", GeometryKind::Explicit}};
  return k;
}

// which geometry keys each kind reads
bool uses(GeometryKind k, std::string_view key) {
  switch (k) {
    case GeometryKind::Gauge: return key == "lambda" || key == "coframe";
    case GeometryKind::Cayley: return key == "s" || key == "coframe";
    case GeometryKind::Symmetric: return key == "lambda" || key == "potential";
    case GeometryKind::Conformal: return key == "f" || key == "s" || key == "coframe";
    case GeometryKind::Explicit: return key == "omega" || key == "coframe";
  }
  return false;
}

struct Entry {
  Text key, value;
};

struct Section {
  Text header;
  std::string kind, name;
  std::vector<Entry> entries;
};

std::vector<Section> split_sections(std::string_view text) {
  std::vector<Section> out;
  int line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    if (auto h = raw.find('#'); h != std::string_view::npos) raw = raw.substr(0, h);
    Text t = trim({raw, line, 1});
    if (t.s.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (t.s.front() == '[') {
      if (t.s.back() != ']') fail(t, "unterminated section header");
      Text inner = trim({t.s.substr(1, t.s.size() - 2), line, t.column + 1});
      Section s{t, "", "", {}};
      auto sp = inner.s.find_first_of(" \t");
      s.kind = std::string(inner.s.substr(0, sp));
      if (sp != std::string_view::npos) s.name = std::string(trim({inner.s.substr(sp), line, 1}).s);
      bool named = s.kind == "curve" || s.kind == "patch";
      static const std::set<std::string> plain{"geometry", "theory", "vectors", "config"};
      if (!named && !plain.count(s.kind)) fail(inner, "unknown section '" + s.kind + "'");
      if (named && s.name.empty()) fail(inner, "section '" + s.kind + "' needs a name");
      if (!named && !s.name.empty()) fail(inner, "section '" + s.kind + "' takes no name");
      out.push_back(std::move(s));
    } else {
      if (out.empty()) fail(t, "entry outside of any section");
      auto eq = t.s.find('=');
      if (eq == std::string_view::npos) fail(t, "expected 'key = value'");
      Text key = trim({t.s.substr(0, eq), line, t.column});
      Text value = trim({t.s.substr(eq + 1), line, t.column + static_cast<int>(eq) + 1});
      if (key.s.empty()) fail(t, "missing key");
      if (value.s.empty()) fail(value, "missing value for '" + std::string(key.s) + "'");
      out.back().entries.push_back({key, value});
    }
    if (end == text.size()) break;
  }
  return out;
}

void parse_geometry(const Section& sec, Scenario& sc) {
  std::optional<GeometryKind> kind;
  std::set<std::string> seen;
  std::vector<Entry> rest;
  for (const auto& e : sec.entries) {
    if (!seen.insert(std::string(e.key.s)).second) fail(e.key, "duplicate key '" + std::string(e.key.s) + "'");
    if (e.key.s == "kind") {
      auto it = kinds().find(e.value.s);
      if (it == kinds().end()) fail(e.value, "unknown geometry kind '" + std::string(e.value.s) + "'");
      kind = it->second;
    } else {
      rest.push_back(e);
    }
  }
  if (!kind) fail(sec.header, "geometry section needs 'kind'");
  sc.kind = *kind;
  for (const auto& e : rest) {
    std::string_view k = e.key.s;
    std::string base(k.substr(0, k.find('.')));
    static const std::set<std::string> known{"lambda", "s", "f", "potential", "coframe", "omega"};
    if (!known.count(base)) fail(e.key, "unknown key '" + std::string(k) + "' in [geometry]");
    if (!uses(sc.kind, base)) fail(e.key, "key '" + base + "' is not used by kind '" + to_string(sc.kind) + "'");
    if (base == "f") {
      if (k != "f") fail(e.key, "unknown key '" + std::string(k) + "'");
      sc.f = scalar(e.value);
    } else if (base == "potential") {
      sc.potential[indices(e.key, base, 1)[0]] = scalar(e.value);
    } else if (base == "omega") {
      auto ij = indices(e.key, base, 2);
      Form w = parse_form(e.value.s, pos(e.value));
      if (w.degree() != 1) fail(e.value, "connection entries are 1-forms");
      sc.omega.at({ij[0], ij[1]}) = w;
    } else {
      auto ij = indices(e.key, base, 2);
      ScalarMatrix& m = base == "lambda" ? sc.lambda : base == "s" ? sc.s : sc.coframe;
      m[ij[0]][ij[1]] = scalar(e.value);
    }
  }
  try {
    sc.geometry();
  } catch (const DomainError& err) {
    fail(sec.header, err.what());
  }
}

void parse_theory(const Section& sec, Scenario& sc) {
  std::set<std::string> seen;
  for (const auto& e : sec.entries) {
    if (!seen.insert(std::string(e.key.s)).second) fail(e.key, "duplicate key '" + std::string(e.key.s) + "'");
    if (e.key.s == "C") {
      ScalarField c = scalar(e.value);
      if (!c.is_constant()) fail(e.value, "C must be a rational constant");
      sc.c = c.constant_value();
      if (sc.c.is_zero()) fail(e.value, "C must be nonzero");
    } else if (has_prefix(e.key.s, "theta")) {
      auto ij = indices(e.key, "theta", 2);
      if (!sc.theta) sc.theta = ScalarMatrix{};
      (*sc.theta)[ij[0]][ij[1]] = scalar(e.value);
    } else {
      fail(e.key, "unknown key '" + std::string(e.key.s) + "' in [theory]");
    }
  }
  if (sc.theta && !is_zero((*sc.theta)[0][0] + (*sc.theta)[1][1] + (*sc.theta)[2][2]))
    fail(sec.header, "disclination density input must be traceless");
}

void parse_vectors(const Section& sec, Scenario& sc) {
  std::set<std::string> seen;
  for (const auto& e : sec.entries) {
    if (!seen.insert(std::string(e.key.s)).second) fail(e.key, "duplicate key '" + std::string(e.key.s) + "'");
    if (e.key.s != "U" && e.key.s != "V") fail(e.key, "unknown key '" + std::string(e.key.s) + "' in [vectors]");
    auto parts = triple(e.value, false);
    FrameVector& v = e.key.s == "U" ? sc.u : sc.v;
    for (int i = 0; i < 3; ++i) v[i] = parse_double(parts[i]);
  }
}

void parse_curve(const Section& sec, Scenario& sc) {
  bool closed = true;
  bool closed_seen = false;
  std::vector<CurveSegment> segs;
  for (const auto& e : sec.entries) {
    if (e.key.s == "closed") {
      if (closed_seen) fail(e.key, "duplicate key 'closed'");
      closed_seen = true;
      closed = parse_bool(e.value);
    } else if (e.key.s == "segment") {
      auto parts = triple(e.value, true);
      segs.push_back({polynomial(parts[0], curve_vars()), polynomial(parts[1], curve_vars()),
                      polynomial(parts[2], curve_vars())});
    } else {
      fail(e.key, "unknown key '" + std::string(e.key.s) + "' in [curve]");
    }
  }
  try {
    sc.curves.emplace_back(sec.name, PiecewiseCurve(std::move(segs), closed));
  } catch (const DomainError& err) {
    fail(sec.header, err.what());
  }
}

void parse_patch(const Section& sec, Scenario& sc) {
  std::optional<CurveSegment> map;
  for (const auto& e : sec.entries) {
    if (e.key.s != "map") fail(e.key, "unknown key '" + std::string(e.key.s) + "' in [patch]");
    if (map) fail(e.key, "duplicate key 'map'");
    auto parts = triple(e.value, true);
    map = CurveSegment{polynomial(parts[0], patch_vars()), polynomial(parts[1], patch_vars()),
                       polynomial(parts[2], patch_vars())};
  }
  if (!map) fail(sec.header, "patch needs a 'map'");
  sc.patches.emplace_back(sec.name, Patch(*map));
}

void parse_config(const Section& sec, Scenario& sc) {
  std::set<std::string> seen;
  for (const auto& e : sec.entries) {
    std::string k(e.key.s);
    if (!seen.insert(k).second) fail(e.key, "duplicate key '" + k + "'");
    if (k == "seed") {
      unsigned long long v = 0;
      auto [ptr, ec] = std::from_chars(e.value.s.data(), e.value.s.data() + e.value.s.size(), v);
      if (ec != std::errc() || ptr != e.value.s.data() + e.value.s.size()) fail(e.value, "expected an unsigned integer");
      sc.zero.seed = v;
    } else if (k == "points") {
      sc.zero.num_points = static_cast<int>(parse_int(e.value, 4));
    } else if (k == "coord_bound") {
      sc.zero.coord_bound = static_cast<int>(parse_int(e.value, 1));
    } else if (k == "max_expand_degree") {
      sc.zero.max_expand_degree = static_cast<int>(parse_int(e.value, 0));
    } else if (k == "ode_steps") {
      sc.numeric.ode_steps = static_cast<int>(parse_int(e.value, 16));
    } else if (k == "quad_order") {
      sc.numeric.quad_order = static_cast<int>(parse_int(e.value, 4));
    } else if (k == "tol") {
      sc.numeric.tol = parse_double(e.value);
      if (!(sc.numeric.tol > 0)) fail(e.value, "tol must be positive");
    } else {
      fail(e.key, "unknown key '" + k + "' in [config]");
    }
  }
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string poly(const MultiPoly& p, const std::array<const char*, 3>& names) { return p.to_string(names); }

std::string tuple(const CurveSegment& m, const std::array<const char*, 3>& names) {
  return "(" + poly(m[0], names) + ", " + poly(m[1], names) + ", " + poly(m[2], names) + ")";
}

void matrix_entries(std::string& out, const char* name, const ScalarMatrix& m, const ScalarMatrix& dflt) {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (!(m[a][b] == dflt[a][b]))
        out += std::string(name) + "." + std::to_string(a + 1) + "." + std::to_string(b + 1) + " = " +
               m[a][b].to_string() + "\n";
}

}  // namespace

std::string to_string(GeometryKind k) {
  for (const auto& [name, v] : kinds())
    if (v == k) return name;
  return "?";
}

Geometry Scenario::geometry() const {
  switch (kind) {
    case GeometryKind::Gauge: return Geometry(Coframe(coframe), gauge_connection(GaugeField(lambda)));
    case GeometryKind::Cayley: return Geometry(Coframe(coframe), gauge_connection(cayley_rotation(s)));
    case GeometryKind::Symmetric: {
      GaugeField l(lambda);
      return Geometry(symmetric_coframe(l, potential), gauge_connection(l));
    }
    case GeometryKind::Conformal: return Geometry(Coframe(coframe), gauge_connection(conformal_gauge(f, s)));
    case GeometryKind::Explicit: return Geometry(Coframe(coframe), omega);
  }
  throw DomainError("unknown geometry kind");
}

bool operator==(const Scenario& a, const Scenario& b) {
  auto zero_eq = [](const ZeroTestConfig& x, const ZeroTestConfig& y) {
    return x.seed == y.seed && x.num_points == y.num_points && x.coord_bound == y.coord_bound &&
           x.max_expand_degree == y.max_expand_degree;
  };
  auto num_eq = [](const NumericConfig& x, const NumericConfig& y) {
    return x.ode_steps == y.ode_steps && x.quad_order == y.quad_order && x.tol == y.tol;
  };
  return a.kind == b.kind && a.lambda == b.lambda && a.s == b.s && a.f == b.f && a.potential == b.potential &&
         a.coframe == b.coframe && a.omega == b.omega && a.c == b.c && a.theta == b.theta && a.u == b.u &&
         a.v == b.v && a.curves == b.curves && a.patches == b.patches && zero_eq(a.zero, b.zero) &&
         num_eq(a.numeric, b.numeric);
}

Scenario parse_scenario(std::string_view text) {
  Scenario sc;
  std::set<std::string> seen;
  bool geometry = false;
  for (const auto& sec : split_sections(text)) {
    std::string id = sec.kind + " " + sec.name;
    if (!seen.insert(id).second)
      fail(sec.header, "duplicate section [" + sec.kind + (sec.name.empty() ? "" : " " + sec.name) + "]");
    if (sec.kind == "geometry") {
      parse_geometry(sec, sc);
      geometry = true;
    } else if (sec.kind == "theory") {
      parse_theory(sec, sc);
    } else if (sec.kind == "vectors") {
      parse_vectors(sec, sc);
    } else if (sec.kind == "curve") {
      parse_curve(sec, sc);
    } else if (sec.kind == "patch") {
      parse_patch(sec, sc);
    } else {
      parse_config(sec, sc);
    }
  }
  if (!geometry) throw ParseError("scenario needs a [geometry] section", 1, 1);
  return sc;
}

std::string serialize(const Scenario& s) {
  const Scenario d;
  std::string out = "[geometry]\nkind = " + to_string(s.kind) + "\n";
  if (uses(s.kind, "lambda")) matrix_entries(out, "lambda", s.lambda, d.lambda);
  if (uses(s.kind, "s")) matrix_entries(out, "s", s.s, d.s);
  if (uses(s.kind, "f") && !(s.f == d.f)) out += "f = " + s.f.to_string() + "\n";
  if (uses(s.kind, "potential"))
    for (int a = 0; a < 3; ++a)
      if (!(s.potential[a] == d.potential[a]))
        out += "potential." + std::to_string(a + 1) + " = " + s.potential[a].to_string() + "\n";
  if (uses(s.kind, "coframe")) matrix_entries(out, "coframe", s.coframe, d.coframe);
  if (uses(s.kind, "omega"))
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        if (!s.omega.at({a, b}).is_exactly_zero())
          out += "omega." + std::to_string(a + 1) + "." + std::to_string(b + 1) + " = " +
                 s.omega.at({a, b}).to_string() + "\n";
  out += "\n[theory]\nC = " + s.c.to_string() + "\n";
  if (s.theta) {
    std::size_t before = out.size();
    matrix_entries(out, "theta", *s.theta, ScalarMatrix{});
    if (out.size() == before) out += "theta.1.1 = 0\n";
  }
  out += "\n[vectors]\nU = " + num(s.u[0]) + ", " + num(s.u[1]) + ", " + num(s.u[2]) + "\n";
  out += "V = " + num(s.v[0]) + ", " + num(s.v[1]) + ", " + num(s.v[2]) + "\n";
  for (const auto& [name, c] : s.curves) {
    out += "\n[curve " + name + "]\nclosed = " + (c.closed() ? "true" : "false") + "\n";
    for (const auto& seg : c.segments()) out += "segment = " + tuple(seg, {"t", "y", "z"}) + "\n";
  }
  for (const auto& [name, p] : s.patches) out += "\n[patch " + name + "]\nmap = " + tuple(p.map(), {"u", "v", "z"}) + "\n";
  out += "\n[config]\nseed = " + std::to_string(s.zero.seed) + "\npoints = " + std::to_string(s.zero.num_points) +
         "\ncoord_bound = " + std::to_string(s.zero.coord_bound) +
         "\nmax_expand_degree = " + std::to_string(s.zero.max_expand_degree) +
         "\node_steps = " + std::to_string(s.numeric.ode_steps) +
         "\nquad_order = " + std::to_string(s.numeric.quad_order) + "\ntol = " + num(s.numeric.tol) + "\n";
  return out;
}

}  // namespace defectforms::cli
