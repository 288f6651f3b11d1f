#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "meyerap/aprank.hpp"
#include "meyerap/cps.hpp"
#include "meyerap/errors.hpp"
#include "meyerap/io.hpp"
#include "meyerap/linalg.hpp"
#include "meyerap/literal.hpp"
#include "meyerap/progression.hpp"
#include "meyerap/vdw.hpp"

namespace meyerap::cli {

using nlohmann::json;

namespace {

/// 64-bit FNV-1a; identifies inputs in reports, not a security digest.
std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string input_bytes(const std::string& spec) {
  std::ifstream in(spec, std::ios::binary);
  if (!in) return spec;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Context {
  const Command& cmd;
  json inputs = json::object();
  std::size_t budget = kDefaultPointBudget;

  void note(const char* key, const std::string& spec) { inputs[key] = {{"spec", spec}, {"digest", digest(input_bytes(spec))}}; }

  const std::string& need(const std::optional<std::string>& flag, const char* name) {
    if (!flag) throw InvalidArgument(std::string("--") + name + " is required for " + cmd.name);
    note(name, *flag);
    return *flag;
  }

  std::size_t need(const std::optional<std::size_t>& flag, const char* name) {
    if (!flag) throw InvalidArgument(std::string("--") + name + " is required for " + cmd.name);
    return *flag;
  }

  CutProjectScheme scheme() { return io::load_cps(need(cmd.cps, "cps")); }

  Window window(const CutProjectScheme& cps) { return io::load_window(need(cmd.window, "window"), cps.m()); }

  QuadVector center(std::size_t d) {
    if (!cmd.center) return QuadVector(d);
    note("center", *cmd.center);
    QuadVector y;
    std::string text = *cmd.center;
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) y.push_back(parse_quad_literal(part));
    if (y.size() != d) throw DimensionMismatch("--center needs " + std::to_string(d) + " coordinates");
    return y;
  }

  Region region(std::size_t d, const char* fallback) {
    const std::string spec = cmd.region.value_or(fallback);
    note("region", spec);
    return parse_region(spec, d);
  }
};

json point_json(const LatticePoint& p) {
  return {{"coords", p.coords}, {"physical", io::dual(p.physical)}, {"internal", io::dual(p.internal)}};
}

json report_ap(const ArithmeticProgression& ap) {
  json j = io::ap_to_json(ap);
  j["rank"] = ap_rank(ap);
  j["points"] = point_count(ap);
  return j;
}

json cmd_gen(Context& ctx, int& code) {
  const auto cps = ctx.scheme();
  const auto w = ctx.window(cps);
  const auto region = ctx.region(cps.d(), "|x|<=10");
  const auto points = enumerate_model_set(cps, w, region, ctx.budget);
  json out{{"count", points.size()}};
  json list = json::array();
  for (const auto& p : points) list.push_back(point_json(p));
  out["points"] = list;
  if (points.size() >= 2) {
    std::vector<QuadVector> phys;
    for (const auto& p : points) phys.push_back(p.physical);
    out["min_squared_gap"] = io::dual(min_squared_gap(phys));
  }
  if (ctx.cmd.points_out) {
    std::ofstream f(*ctx.cmd.points_out);
    if (!f) throw InvalidArgument("cannot write '" + *ctx.cmd.points_out + "'");
    io::write_points(f, points);
  }
  code = kSuccess;
  return out;
}

json cmd_validate(Context& ctx, int& code) {
  const auto cps = ctx.scheme();
  const auto r = validate(cps);
  code = r.ok() ? kSuccess : kFailure;
  return {{"lattice_invertible", r.lattice_invertible},
          {"projection_injective", r.projection_injective},
          {"density", std::string(to_string(r.density))},
          {"determinant", io::dual(cps.determinant())},
          {"ok", r.ok()}};
}

json cmd_rank(Context& ctx, int& code) {
  if (ctx.cmd.positional.size() != 1) throw InvalidArgument("rank takes exactly one point file");
  const std::string& path = ctx.cmd.positional.front();
  ctx.note("points", path);
  std::size_t width = 0;
  if (ctx.cmd.cps) width = ctx.scheme().rank();
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  const auto points = io::read_point_coords(in, width);
  code = kSuccess;
  return {{"points", points.size()}, {"rank", rank_over_q(points)}};
}

std::size_t parse_count(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s.front() == '-') {
    throw InvalidArgument(std::string(what) + " must be a natural number, got '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

json cmd_crt(Context& ctx, int& code) {
  if (ctx.cmd.positional.size() != 2) throw InvalidArgument("crt takes two arguments: n N");
  const std::size_t n = parse_count(ctx.cmd.positional[0], "n");
  const std::size_t len = parse_count(ctx.cmd.positional[1], "N");
  const auto crt = crt_coefficients(n, len);
  json primes = json::array(), values = json::array();
  for (const auto& p : crt.primes) primes.push_back(io::rational_json(Rational(p)));
  for (const auto& m : crt.values) values.push_back(io::rational_json(Rational(m)));
  code = kSuccess;
  return {{"n", n}, {"length", len}, {"primes", primes}, {"m", values}};
}

json cmd_find_ap(Context& ctx, int& code) {
  const std::size_t len = ctx.need(ctx.cmd.length, "length");
  ConstructionOptions opts;
  opts.budget = ctx.budget;
  if (ctx.cmd.expr) {
    const auto expr = io::load_expr(ctx.need(ctx.cmd.expr, "expr"));
    const auto y = ctx.center(expr.cps().d());
    const auto result = li_ap_in_meyer(expr, len, y, opts);
    json out{{"progression", report_ap(result.ap)}, {"branch", result.branch}};
    if (result.radius) out["radius"] = io::dual(*result.radius);
    code = kSuccess;
    return out;
  }

  const auto cps = ctx.scheme();
  const auto w = ctx.window(cps);
  const auto y = ctx.center(cps.d());
  const std::size_t target = ctx.cmd.rank_target.value_or(cps.rank());
  json out{{"rank_ceiling", cps.rank()}, {"rank_target", target}};
  if (target == 0) throw InvalidArgument("--rank-target must be positive");

  const auto result = li_ap_in_model_set(cps, w, len, y, opts);
  const Rational& radius = result.radius;
  out["radius"] = io::dual(radius);
  out["covering_radius"] = io::dual(result.covering_radius);

  if (target <= cps.rank()) {
    ArithmeticProgression ap = result.ap;
    ap.ratios.resize(target);
    out["progression"] = report_ap(ap);
    json stars = json::array();
    for (const auto& p : ap_points(ap, ctx.budget)) stars.push_back(point_json(star(cps, *to_coords(p))));
    out["points"] = stars;
    code = kSuccess;
  } else {
    out["message"] = "no li-progression of rank " + std::to_string(target) + " exists in a model set of a scheme with d+m = " +
                     std::to_string(cps.rank());
    code = kFailure;
  }

  if (ctx.cmd.oracle) {
    // Exhaustive search inside the same ball, independent of the construction.
    std::vector<RatVector> sample;
    for (const auto& p : enumerate_model_set(cps, w, Region::ball(y, radius * radius), ctx.budget)) {
      sample.push_back(to_rational(p.coords));
    }
    const auto found = brute_force_li_ap(sample, target, len, ctx.budget);
    json oracle{{"sample_points", sample.size()}, {"found", found.has_value()}};
    if (found) oracle["progression"] = report_ap(*found);
    const bool agrees = found.has_value() == (target <= cps.rank());
    oracle["agrees"] = agrees;
    out["oracle"] = oracle;
    if (!agrees) code = kFailure;
  }
  return out;
}

json cmd_vdw(Context& ctx, int& code) {
  const auto coloring = io::load_coloring(ctx.need(ctx.cmd.colors, "colors"));
  const std::size_t depth = ctx.need(ctx.cmd.length, "length");
  const auto grid = find_mono_grid(coloring, depth);
  json out{{"side", coloring.side()}, {"dim", coloring.dim()}, {"colors", coloring.num_colors()}, {"depth", depth}};
  if (grid) {
    out["grid"] = {{"offsets", grid->offsets}, {"steps", grid->steps}, {"depth", grid->depth}};
    out["color"] = coloring.color(grid->offsets);
    code = kSuccess;
  } else {
    out["grid"] = nullptr;
    code = kFailure;
  }
  return out;
}

MeyerExpr expr_or_model_set(Context& ctx) {
  if (ctx.cmd.expr) return io::load_expr(ctx.need(ctx.cmd.expr, "expr"));
  auto cps = ctx.scheme();
  auto w = ctx.window(cps);
  std::vector<Branch> branches{{QuadVector(cps.d()), std::move(w)}};
  return MeyerExpr(std::move(cps), std::move(branches));
}

json cmd_aprank(Context& ctx, int& code) {
  const auto expr = expr_or_model_set(ctx);
  const std::size_t max_len = ctx.cmd.length.value_or(3);
  ConstructionOptions opts;
  opts.budget = ctx.budget;
  const auto bracket = aprank_bounds(expr, max_len, opts);
  json certs = json::array();
  for (const auto& c : bracket.certificates) certs.push_back(report_ap(c));
  const auto region = ctx.region(expr.cps().d(), "|x|<=20");
  code = kSuccess;
  return {{"lower", bracket.lower},
          {"upper", bracket.upper},
          {"upper_justification", std::string(to_string(bracket.upper_tag))},
          {"tested_lengths", bracket.tested_lengths},
          {"certificates", certs},
          {"sampled_module_rank", sampled_module_rank(expr, region, ctx.budget)}};
}

json cmd_euclideanize(Context& ctx, int& code) {
  const auto expr = io::load_expr(ctx.need(ctx.cmd.expr, "expr"));
  EuclideanizeOptions opts;
  opts.budget = ctx.budget;
  const auto result = euclideanize(expr, opts);
  if (const auto* gap = std::get_if<RankGap>(&result)) {
    code = kFailure;
    return {{"rank_gap", {{"branch", gap->branch}, {"tag", gap->tag}}},
            {"message", "translate '" + gap->tag + "' is independent of the lattice; aprank < rank"}};
  }
  const auto& e = std::get<Euclideanization>(result);
  json lifts = json::array();
  for (const auto& g : e.lifts) lifts.push_back(io::dual(g));
  code = e.report.verified ? kSuccess : kFailure;
  return {{"cps", io::cps_to_json(e.cps)},
          {"window", io::window_to_json(e.window)},
          {"multiplier", io::rational_json(Rational(e.multiplier))},
          {"lifts", lifts},
          {"verification",
           {{"sample_radius", io::dual(e.report.sample_radius)},
            {"point_count", e.report.point_count},
            {"verified", e.report.verified}}}};
}

json cmd_example(Context& ctx, int& code) {
  if (ctx.cmd.positional.empty()) throw InvalidArgument("example needs a name");
  const std::string& name = ctx.cmd.positional.front();
  code = kSuccess;
  if (name == "rank-gap") {
    const std::size_t n = ctx.cmd.positional.size() > 1 ? parse_count(ctx.cmd.positional[1], "n") : 1;
    const std::string cps_name = ctx.cmd.cps.value_or("fibonacci");
    ctx.note("cps", cps_name);
    const auto cps = io::load_cps(cps_name);
    const auto expr = ctx.cmd.window ? rank_gap_example(cps, n, ctx.window(cps)) : rank_gap_example(cps, n);
    const auto region = ctx.region(cps.d(), "|x|<=20");
    return {{"expr", io::expr_to_json(expr, cps_name)},
            {"sampled_module_rank", sampled_module_rank(expr, region, ctx.budget)},
            {"rank_ceiling", cps.rank()}};
  }
  if (ctx.cmd.positional.size() != 1) throw InvalidArgument("example '" + name + "' takes no further arguments");
  const auto cps = builtin(name);
  const auto r = validate(cps);
  return {{"cps", io::cps_to_json(cps)},
          {"validation",
           {{"lattice_invertible", r.lattice_invertible},
            {"projection_injective", r.projection_injective},
            {"density", std::string(to_string(r.density))}}}};
}

using Handler = std::function<json(Context&, int&)>;

struct Spec {
  Handler handler;
  std::set<std::string> flags;
};

const std::map<std::string, Spec>& table() {
  static const std::map<std::string, Spec> t = {
      {"gen", {cmd_gen, {"cps", "window", "region", "budget", "points"}}},
      {"validate", {cmd_validate, {"cps"}}},
      {"rank", {cmd_rank, {"cps"}}},
      {"crt", {cmd_crt, {}}},
      {"find-ap", {cmd_find_ap, {"cps", "window", "expr", "center", "length", "rank-target", "budget", "oracle"}}},
      {"vdw", {cmd_vdw, {"colors", "length"}}},
      {"aprank", {cmd_aprank, {"cps", "window", "expr", "region", "length", "budget"}}},
      {"euclideanize", {cmd_euclideanize, {"expr", "budget"}}},
      {"example", {cmd_example, {"cps", "window", "region", "budget"}}},
  };
  return t;
}

std::vector<std::string> given_flags(const Command& c) {
  std::vector<std::string> f;
  if (c.cps) f.push_back("cps");
  if (c.window) f.push_back("window");
  if (c.region) f.push_back("region");
  if (c.center) f.push_back("center");
  if (c.expr) f.push_back("expr");
  if (c.colors) f.push_back("colors");
  if (c.points_out) f.push_back("points");
  if (c.length) f.push_back("length");
  if (c.rank_target) f.push_back("rank-target");
  if (c.budget) f.push_back("budget");
  if (c.oracle) f.push_back("oracle");
  return f;
}

json echo(const Command& c) {
  json flags = json::object();
  if (c.cps) flags["cps"] = *c.cps;
  if (c.window) flags["window"] = *c.window;
  if (c.region) flags["region"] = *c.region;
  if (c.center) flags["center"] = *c.center;
  if (c.expr) flags["expr"] = *c.expr;
  if (c.colors) flags["colors"] = *c.colors;
  if (c.points_out) flags["points"] = *c.points_out;
  if (c.length) flags["length"] = *c.length;
  if (c.rank_target) flags["rank-target"] = *c.rank_target;
  if (c.budget) flags["budget"] = *c.budget;
  if (c.oracle) flags["oracle"] = true;
  return {{"name", c.name}, {"arguments", c.positional}, {"flags", flags}};
}

}  // namespace

std::string RunReport::text() const { return document.dump(2) + "\n"; }

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : table()) n.push_back(k);
    return n;
  }();
  return names;
}

RunReport run(const Command& command) {
  RunReport report;
  report.document = {{"command", echo(command)}};
  auto fail = [&](int code, const char* kind, const std::string& message) {
    report.exit_code = code;
    report.document["status"] = code == kFailure ? "failure" : "input-error";
    report.document["error"] = {{"kind", kind}, {"message", message}};
    return report;
  };

  const auto it = table().find(command.name);
  if (it == table().end()) return fail(kInputError, "usage", "unknown command '" + command.name + "'");
  for (const auto& f : given_flags(command)) {
    if (!it->second.flags.count(f)) return fail(kInputError, "usage", "--" + f + " does not apply to " + command.name);
  }

  Context ctx{command};
  if (command.budget) ctx.budget = *command.budget;
  try {
    int code = kSuccess;
    json result = it->second.handler(ctx, code);
    report.exit_code = code;
    report.document["inputs"] = ctx.inputs;
    report.document["result"] = std::move(result);
    report.document["status"] = code == kSuccess ? "ok" : "failure";
    return report;
  } catch (const ParseError& e) {
    return fail(kInputError, "parse", e.what());
  } catch (const BudgetExceeded& e) {
    return fail(kFailure, "budget", e.what());
  } catch (const NoMonoGrid& e) {
    return fail(kFailure, "search", e.what());
  } catch (const PreconditionViolated& e) {
    return fail(kFailure, "precondition", e.what());
  } catch (const Error& e) {
    return fail(kInputError, "input", e.what());
  }
}

}  // namespace meyerap::cli
