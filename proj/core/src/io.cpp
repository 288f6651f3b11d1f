#include "meyerap/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "meyerap/errors.hpp"
#include "meyerap/literal.hpp"

namespace meyerap::io {

json dual(const QuadScalar& x) { return {{"exact", x.to_literal()}, {"decimal", x.to_decimal(20)}}; }

json dual(const Rational& x) { return dual(QuadScalar(x)); }

json dual(const QuadVector& x) {
  json out = json::array();
  for (const auto& c : x) out.push_back(dual(c));
  return out;
}

json rational_json(const Rational& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return x.get_str();
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InvalidArgument("expected an integer or a rational string, got " + j.dump());
}

json rat_vector_json(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

RatVector rat_vector_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of rationals");
  RatVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

QuadScalar quad_from_json(const json& j) {
  if (j.is_number_integer()) return QuadScalar(j.get<long>());
  if (j.is_string()) return parse_quad_literal(j.get<std::string>());
  throw InvalidArgument("expected a quadratic literal, got " + j.dump());
}

QuadVector quad_vector_from_json(const json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of quadratic literals");
  QuadVector v;
  for (const auto& x : j) v.push_back(quad_from_json(x));
  return v;
}

json quad_vector_json(const QuadVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_literal());
  return out;
}

json cps_to_json(const CutProjectScheme& cps) {
  json gens = json::array();
  for (const auto& g : cps.generators()) {
    QuadVector row = g.physical;
    row.insert(row.end(), g.internal.begin(), g.internal.end());
    gens.push_back(quad_vector_json(row));
  }
  return {{"d", cps.d()},
          {"m", cps.m()},
          {"D", cps.radicand()},
          {"generators", gens},
          {"density", std::string(to_string(cps.declared_density()))}};
}

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidArgument(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t count_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned()) throw InvalidArgument(std::string("field '") + key + "' must be a natural number");
  return v.get<std::size_t>();
}

std::string read_text(std::string_view path) {
  std::ifstream in{std::string(path)};
  if (!in) throw InvalidArgument("cannot open '" + std::string(path) + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_file(std::string_view spec) {
  std::error_code ec;
  return std::filesystem::is_regular_file(std::filesystem::path(std::string(spec)), ec);
}

std::vector<bool> flags_from_json(const json& j, const char* key, std::size_t n) {
  if (!j.contains(key)) return std::vector<bool>(n, true);
  std::vector<bool> out;
  for (const auto& b : j.at(key)) {
    if (!b.is_boolean()) throw InvalidArgument(std::string("field '") + key + "' must hold booleans");
    out.push_back(b.get<bool>());
  }
  return out;
}

json flags_json(const std::vector<bool>& v) {
  json out = json::array();
  for (bool b : v) out.push_back(b);
  return out;
}

}  // namespace

json read_json_file(std::string_view path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw InvalidArgument("'" + std::string(path) + "' is not valid JSON: " + e.what());
  }
}

CutProjectScheme cps_from_json(const json& j) {
  const std::size_t d = count_field(j, "d");
  const std::size_t m = count_field(j, "m");
  const json& radicand = field(j, "D");
  if (!radicand.is_number_integer()) throw InvalidArgument("field 'D' must be an integer");
  const json& rows = field(j, "generators");
  if (!rows.is_array()) throw InvalidArgument("field 'generators' must be an array");
  std::vector<Generator> gens;
  for (const auto& row : rows) {
    const QuadVector v = quad_vector_from_json(row);
    if (v.size() != d + m) throw DimensionMismatch("each generator needs d + m coordinates");
    gens.push_back({QuadVector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d)),
                    QuadVector(v.begin() + static_cast<std::ptrdiff_t>(d), v.end())});
  }
  DensityStatus density = DensityStatus::unverified;
  if (j.contains("density")) density = density_from_string(j.at("density").get<std::string>());
  if (m >= 2 && density == DensityStatus::proved) density = DensityStatus::assumed;
  return CutProjectScheme(d, m, radicand.get<std::int64_t>(), std::move(gens), density);
}

CutProjectScheme load_cps(std::string_view spec) {
  if (is_file(spec)) return cps_from_json(read_json_file(spec));
  return builtin(spec);
}

json window_to_json(const Window& w) {
  return std::visit(
      [&](const auto& s) -> json {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, BoxWindow>) {
          return {{"type", "box"},
                  {"lo", quad_vector_json(s.lo)},
                  {"hi", quad_vector_json(s.hi)},
                  {"lo_closed", flags_json(s.lo_closed)},
                  {"hi_closed", flags_json(s.hi_closed)}};
        } else if constexpr (std::is_same_v<S, BallWindow>) {
          return {{"type", "ball"}, {"center", quad_vector_json(s.center)}, {"radius_sq", s.radius_sq.get_str()}};
        } else {
          json parts = json::array();
          for (const auto& p : s.parts) {
            parts.push_back({{"shift", quad_vector_json(p.shift)}, {"window", window_to_json(*p.base)}});
          }
          return {{"type", "union"}, {"parts", parts}};
        }
      },
      w.shape());
}

Window window_from_json(const json& j, std::size_t m) {
  if (j.is_string()) return parse_window(j.get<std::string>(), m);
  const std::string type = field(j, "type").get<std::string>();
  Window w = Window::trivial();
  if (type == "box") {
    QuadVector lo = quad_vector_from_json(field(j, "lo"));
    QuadVector hi = quad_vector_from_json(field(j, "hi"));
    const std::size_t n = lo.size();
    w = Window::box(std::move(lo), std::move(hi), flags_from_json(j, "lo_closed", n), flags_from_json(j, "hi_closed", n));
  } else if (type == "ball") {
    w = Window::ball(quad_vector_from_json(field(j, "center")), rational_from_json(field(j, "radius_sq")));
  } else if (type == "union") {
    std::vector<std::pair<QuadVector, Window>> parts;
    for (const auto& p : field(j, "parts")) {
      parts.emplace_back(quad_vector_from_json(field(p, "shift")), window_from_json(field(p, "window"), m));
    }
    w = Window::shifted_union(std::move(parts));
  } else {
    throw InvalidArgument("unknown window type '" + type + "'");
  }
  if (w.dim() != m) throw DimensionMismatch("window dimension differs from internal dimension");
  return w;
}

Window load_window(std::string_view spec, std::size_t m) {
  if (is_file(spec)) return window_from_json(read_json_file(spec), m);
  return parse_window(spec, m);
}

json ap_to_json(const ArithmeticProgression& ap) {
  json ratios = json::array();
  for (const auto& r : ap.ratios) ratios.push_back(rat_vector_json(r));
  return {{"base", rat_vector_json(ap.base)},
          {"ratios", ratios},
          {"length", ap.length},
          {"coordinate_kind", ap.kind == CoordinateKind::lattice ? "lattice" : "module"}};
}

ArithmeticProgression ap_from_json(const json& j) {
  ArithmeticProgression ap;
  ap.base = rat_vector_from_json(field(j, "base"));
  for (const auto& r : field(j, "ratios")) {
    ap.ratios.push_back(rat_vector_from_json(r));
    if (ap.ratios.back().size() != ap.base.size()) throw DimensionMismatch("ratio and base dimensions differ");
  }
  ap.length = count_field(j, "length");
  const std::string kind = j.value("coordinate_kind", "lattice");
  if (kind == "lattice") {
    ap.kind = CoordinateKind::lattice;
  } else if (kind == "module") {
    ap.kind = CoordinateKind::module;
  } else {
    throw InvalidArgument("unknown coordinate kind '" + kind + "'");
  }
  return ap;
}

json expr_to_json(const MeyerExpr& expr, const json& cps_ref) {
  json branches = json::array();
  for (const auto& b : expr.branches()) {
    json t;
    if (const auto* q = std::get_if<QuadVector>(&b.translate)) {
      t = quad_vector_json(*q);
    } else {
      const auto& s = std::get<SymbolicTranslate>(b.translate);
      t = {{"symbolic", s.tag}, {"approx", s.approx}};
    }
    branches.push_back({{"translate", t}, {"window", window_to_json(b.window)}});
  }
  return {{"cps", cps_ref}, {"branches", branches}};
}

MeyerExpr expr_from_json(const json& j) {
  const json& ref = field(j, "cps");
  CutProjectScheme cps = ref.is_string() ? load_cps(ref.get<std::string>()) : cps_from_json(ref);
  std::vector<Branch> branches;
  for (const auto& b : field(j, "branches")) {
    const json& t = field(b, "translate");
    Translate translate;
    if (t.is_object()) {
      SymbolicTranslate s{field(t, "symbolic").get<std::string>(), {}};
      for (const auto& a : field(t, "approx")) s.approx.push_back(a.is_string() ? a.get<std::string>() : a.dump());
      translate = std::move(s);
    } else {
      translate = quad_vector_from_json(t);
    }
    branches.push_back({std::move(translate), window_from_json(field(b, "window"), cps.m())});
  }
  return MeyerExpr(std::move(cps), std::move(branches));
}

MeyerExpr load_expr(std::string_view path) { return expr_from_json(read_json_file(path)); }

CubeColoring read_coloring(std::istream& in) {
  std::size_t side = 0, dim = 0, colors = 0;
  if (!(in >> side >> dim >> colors)) throw InvalidArgument("coloring header must read 'N d r'");
  std::vector<std::uint32_t> values;
  std::uint32_t c = 0;
  while (in >> c) values.push_back(c);
  if (!in.eof()) throw InvalidArgument("coloring entries must be natural numbers");
  return CubeColoring(side, dim, colors, std::move(values));
}

void write_coloring(std::ostream& out, const CubeColoring& c) {
  out << c.side() << ' ' << c.dim() << ' ' << c.num_colors() << '\n';
  for (auto v : c.colors()) out << v << '\n';
}

CubeColoring load_coloring(std::string_view path) {
  std::ifstream in{std::string(path)};
  if (!in) throw InvalidArgument("cannot open '" + std::string(path) + "'");
  return read_coloring(in);
}

void write_points(std::ostream& out, std::span<const LatticePoint> points) {
  for (const auto& p : points) {
    bool first = true;
    for (Coord c : p.coords) {
      out << (first ? "" : "\t") << c;
      first = false;
    }
    for (const auto& x : p.physical) out << '\t' << x.to_decimal(20);
    out << '\n';
  }
}

std::vector<RatVector> read_point_coords(std::istream& in, std::size_t width) {
  std::vector<RatVector> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string token;
    RatVector p;
    while ((width == 0 || p.size() < width) && fields >> token) p.push_back(parse_rational(token));
    if (width != 0 && p.size() != width) throw DimensionMismatch("point line has fewer than the expected columns");
    if (!out.empty() && out.front().size() != p.size()) throw DimensionMismatch("point lines differ in width");
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace meyerap::io
