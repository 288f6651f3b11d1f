// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "meyerap/aprank.hpp"
#include "meyerap/errors.hpp"
#include "meyerap/linalg.hpp"
#include "oracles.hpp"

using namespace meyerap;

namespace {

const QuadScalar kPhi(Rational(1, 2), Rational(1, 2), 5);

struct Outcome {
  bool pass = false;
  std::string detail;
};

Window interval(const Rational& lo, const Rational& hi) { return Window::interval(QuadScalar(lo), QuadScalar(hi)); }

bool fib_unit(const RatVector& p) {
  if (p.size() != 2 || p[0].get_den() != 1 || p[1].get_den() != 1) return false;
  return oracle::fib_star_in(p[0].get_num().get_si(), p[1].get_num().get_si(), 0, 1, 2, 1);
}

Outcome enumeration_exactness() {
  cli::Command c{.name = "gen"};
  c.cps = "fibonacci";
  c.window = "[0,1]";
  c.region = "|x|<=30";
  const auto report = cli::run(c);
  const auto fib = builtin("fibonacci");
  const auto pts = enumerate_model_set(fib, interval(0, 1), Region::centered(1, 30));
  const auto expected = oracle::fib_model_set(30, 0, 1, 1, 1);

  bool same = pts.size() == expected.size() && report.document["result"]["count"] == pts.size();
  for (std::size_t i = 0; same && i < pts.size(); ++i) {
    same = pts[i].coords == CoordVector{expected[i].first, expected[i].second};
  }

  std::vector<QuadScalar> xs;
  for (const auto& p : pts) xs.push_back(p.physical[0]);
  std::sort(xs.begin(), xs.end());
  std::set<std::string> gaps;
  bool gaps_ok = true;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const QuadScalar g = xs[i] - xs[i - 1];
    gaps.insert(g.to_literal());
    if (g != QuadScalar(1) && g != kPhi) gaps_ok = false;
  }
  std::vector<QuadVector> phys;
  for (const auto& p : pts) phys.push_back(p.physical);
  const bool gap_one = min_squared_gap(phys) == QuadScalar(1);

  std::string seen;
  for (const auto& g : gaps) seen += (seen.empty() ? "" : ", ") + g;
  std::ostringstream d;
  d << pts.size() << " points, oracle " << (same ? "equal" : "DIFFERS") << "; gaps {" << seen << "}"
    << (gaps_ok ? "" : " not within {1, phi}") << "; min squared gap " << (gap_one ? "1" : "not 1");
  return {same && gaps_ok && gap_one, d.str()};
}

Outcome module_generation() {
  const auto fib = builtin("fibonacci");
  const MeyerExpr expr(fib, {{QuadVector{QuadScalar(0)}, interval(0, 1)}});
  const auto r = sampled_module_rank(expr, Region::centered(1, 20));
  return {r == 2, "sampled rank " + std::to_string(r)};
}

Outcome model_set_progressions() {
  const auto fib = builtin("fibonacci");
  bool ok = true;
  std::ostringstream d;
  for (long yv : {0L, 100L, -77L}) {
    const QuadVector y{QuadScalar(yv)};
    const auto res = li_ap_in_model_set(fib, interval(0, 1), 3, y);
    const auto pts = ap_points(res.ap);
    bool all = pts.size() == 16 && ap_rank(res.ap) == 2;
    for (const auto& p : pts) {
      const auto z = to_coords(p);
      all = all && fib_unit(p) && z &&
            squared_norm(fib.physical(*z) - y) <= QuadScalar(Rational(res.radius * res.radius));
    }
    ok = ok && all;
    d << "y=" << yv << (all ? " ok" : " FAILED") << "; ";
  }
  // The reference progression with base 1+phi and ratios 3+5phi, 5+8phi.
  const ArithmeticProgression fixture{{1, 1}, {{3, 5}, {5, 8}}, 1, CoordinateKind::lattice};
  const std::vector<QuadScalar> stars{QuadScalar(Rational(3, 2), Rational(-1, 2), 5),
                                      QuadScalar(Rational(21, 2), Rational(-9, 2), 5), QuadScalar(7, -3, 5),
                                      QuadScalar(16, -7, 5)};
  const auto pts = ap_points(fixture);
  bool fix = ap_rank(fixture) == 2;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto z = *to_coords(pts[i]);
    fix = fix && fib.internal(z)[0] == stars[i] && interval(0, 1).contains({stars[i]}) && fib_unit(pts[i]);
  }
  d << "fixture " << (fix ? "ok" : "FAILED");
  return {ok && fix, d.str()};
}

Outcome rank_ceiling() {
  const auto fib = builtin("fibonacci");
  const auto pts = enumerate_model_set(fib, interval(0, 1), Region::centered(1, 30));
  std::vector<RatVector> coords;
  for (const auto& p : pts) coords.push_back(to_rational(p.coords));
  // A length-N li-progression contains a length-1 one with the same ratios, so N = 1 settles every N.
  bool none = true;
  for (std::size_t n = 1; n <= 3; ++n) none = none && !brute_force_li_ap(coords, 3, n);
  std::vector<RatVector> diffs;
  for (const auto& p : coords) diffs.push_back({p[0] - coords[0][0], p[1] - coords[0][1]});
  const auto r = rank_over_q(diffs);
  return {none && r == 2, std::string(none ? "no" : "a") + " rank-3 progression for N = 1..3; ratio module rank " +
                              std::to_string(r)};
}

Outcome crt() {
  const auto c = crt_coefficients(2, 2);
  bool ok = c.values == std::vector<Integer>{10, 6};
  std::set<Integer> sums;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) sums.insert(10 * a + 6 * b);
  ok = ok && sums.size() == 9;
  bool proper = true;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t len = 0; len <= 4; ++len) {
      const auto cc = crt_coefficients(n, len);
      ArithmeticProgression ap{{0}, {}, len, CoordinateKind::lattice};
      for (const auto& m : cc.values) ap.ratios.push_back({Rational(m)});
      proper = proper && is_proper(ap);
    }
  }
  return {ok && proper, "m = (" + c.values[0].get_str() + ", " + c.values[1].get_str() + "), " +
                            std::to_string(sums.size()) + " distinct sums, properness " +
                            (proper ? "holds" : "FAILS") + " for n <= 3, N <= 4"};
}

Outcome van_der_waerden() {
  std::size_t found = 0;
  for (unsigned mask = 0; mask < 512; ++mask) {
    std::vector<std::uint32_t> colors(9);
    for (unsigned i = 0; i < 9; ++i) colors[i] = (mask >> i) & 1U;
    if (find_mono_grid(CubeColoring(8, 1, 2, colors), 2)) ++found;
  }
  const bool avoided = !find_mono_grid(CubeColoring(7, 1, 2, {0, 1, 1, 0, 0, 1, 1, 0}), 2);
  return {found == 512 && avoided, std::to_string(found) + "/512 colorings of {0..8} have a grid; 01100110 " +
                                       (avoided ? "has none" : "HAS one")};
}

Outcome submodule_multipliers() {
  bool ok = true;
  std::ostringstream d;
  for (const auto& [a, expected] : {std::pair{IntMatrix{{2, 0}, {0, 3}}, Integer(6)},
                                    std::pair{IntMatrix{{1, 1}, {1, -1}}, Integer(2)}}) {
    const Integer n = submodule_multiplier(a);
    bool solvable = true;
    for (std::size_t i = 0; i < 2; ++i) {
      std::vector<Integer> target(2, 0);
      target[i] = n;
      solvable = solvable && solve_integer_combination(a, target).has_value();
    }
    ok = ok && n == expected && solvable;
    d << "n = " << n.get_str() << (solvable ? " (solvable)" : " (NOT solvable)") << "; ";
  }
  return {ok, d.str()};
}

Outcome rank_gap() {
  const auto fib = builtin("fibonacci");
  const auto expr = rank_gap_example(fib, 1);
  const auto r = sampled_module_rank(expr, Region::centered(1, 20));
  const auto b = aprank_bounds(expr, 3);
  bool certs = b.certificates.size() == 3 && b.tested_lengths == std::vector<std::size_t>{1, 2, 3};
  for (const auto& c : b.certificates) {
    certs = certs && verify_ap(c, [&](const RatVector& p) { return expr.contains(p); });
  }
  const bool gap = std::holds_alternative<RankGap>(euclideanize(expr));
  std::ostringstream d;
  d << "sampled rank " << r << ", bracket [" << b.lower << "," << b.upper << "], " << b.certificates.size()
    << " certificates, euclideanize " << (gap ? "reports a rank gap" : "does NOT report a rank gap");
  return {r == 3 && b.lower == 2 && b.upper == 2 && certs && gap, d.str()};
}

Outcome euclideanization() {
  const auto fib = builtin("fibonacci");
  const MeyerExpr expr(fib, {{QuadVector{QuadScalar(Rational(1, 3))}, interval(0, Rational(1, 2))}});
  const auto e = std::get<Euclideanization>(euclideanize(expr));
  const QuadScalar third(Rational(1, 3));
  const bool gens = e.cps.generators()[0].physical[0] == third && e.cps.generators()[0].internal[0] == third &&
                    e.cps.generators()[1].physical[0] == kPhi * third &&
                    e.cps.generators()[1].internal[0] == kPhi.conjugate() * third;
  const bool shape = e.multiplier == 3 && gens && e.lifts == std::vector<QuadVector>{{third}} &&
                     e.window == interval(Rational(1, 3), Rational(5, 6));
  const auto rc = check_reverse_containment(expr, e, 20);
  std::ostringstream d;
  d << "m = " << e.multiplier.get_str() << ", W' = [1/3,5/6] " << (shape ? "as expected" : "DIFFERS")
    << "; forward: " << e.report.point_count << " points " << (e.report.verified ? "verified" : "NOT verified")
    << "; converse: " << rc.outside << " of " << rc.point_count << " refined points outside the expression";
  if (rc.first_outside) {
    d << " (first at refined coords (" << rc.first_outside->coords[0] << "," << rc.first_outside->coords[1]
      << "), x = " << rc.first_outside->physical[0].to_literal() << ")";
  }
  return {shape && e.report.verified && rc.outside == 0, d.str()};
}

Outcome transfer() {
  const auto fib = builtin("fibonacci");
  const Window w = interval(0, Rational(3, 2));
  // Branches Λ([0,3/2]) and Λ([0,3/2]) + 1 overlap where x* lies in [1, 3/2].
  const MeyerExpr expr(fib, {{QuadVector{QuadScalar(0)}, w}, {QuadVector{QuadScalar(1)}, w}});
  const std::vector<RatVector> translates{expr.translate_coords(0), expr.translate_coords(1)};
  // Overlap points go to the branch named by the parity of a + b; everything else is forced.
  const Decomposition adversarial = [&](const RatVector& p) -> std::optional<std::size_t> {
    const bool in0 = expr.in_branch(0, p), in1 = expr.in_branch(1, p);
    if (in0 && in1) return static_cast<std::size_t>((Rational(p[0] + p[1]).get_num().get_si() % 2 + 2) % 2);
    if (in0) return 0;
    if (in1) return 1;
    return std::nullopt;
  };
  for (std::size_t len = 2; len <= 64; len *= 2) {
    const auto host = li_ap_in_model_set(fib, interval(0, Rational(5, 2)), len, {QuadScalar(0)});
    try {
      const auto out = transfer_ap(host.ap, translates, adversarial, 2);
      bool inside = ap_rank(out.ap) == 2 && out.ap.length == 2;
      for (const auto& q : ap_points(out.ap)) {
        RatVector p = q;
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += translates[out.translate_index][i];
        inside = inside && expr.in_branch(out.translate_index, p) && adversarial(p) == out.translate_index;
      }
      return {inside, "host length " + std::to_string(len) + ", branch " + std::to_string(out.translate_index) +
                          ", rank " + std::to_string(ap_rank(out.ap)) + (inside ? ", re-verified" : ", NOT inside")};
    } catch (const NoMonoGrid&) {
    }
  }
  return {false, "no monochromatic grid up to host length 64"};
}

Outcome lattice_baseline() {
  const auto z2 = integer_lattice(2);
  bool ok = true;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto res = li_ap_in_model_set(z2, Window::trivial(), n, {QuadScalar(0), QuadScalar(0)});
    ok = ok && ap_rank(res.ap) == 2 && res.ap.ratios == std::vector<RatVector>{{1, 0}, {0, 1}};
  }
  return {ok, ok ? "rank 2 with unit ratios for N = 1..5" : "unexpected progression"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria{
      {1, "Fibonacci enumeration", enumeration_exactness, 1},
      {2, "module generation", module_generation, 1},
      {3, "li-progressions in a model set", model_set_progressions, 15},
      {4, "rank ceiling", rank_ceiling, 30},
      {5, "CRT coefficients", crt, 1},
      {6, "van der Waerden engine", van_der_waerden, 1},
      {7, "submodule multiplier", submodule_multipliers, 1},
      {8, "rank-gap example", rank_gap, 10},
      {9, "euclideanization", euclideanization, 5},
      {10, "transfer machinery", transfer, 10},
      {11, "lattice baseline", lattice_baseline, 1},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("%s %2d %s: %s [%.2fs%s]\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs,
                in_time ? "" : ", over time limit");
  }
  return failures == 0 ? 0 : 1;
}
