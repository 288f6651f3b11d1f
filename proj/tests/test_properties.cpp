#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "meyerap/aprank.hpp"
#include "meyerap/errors.hpp"
#include "meyerap/linalg.hpp"
#include "oracles.hpp"

using namespace meyerap;

namespace {

Window fib_window(long lo_num, long lo_den, long hi_num, long hi_den) {
  return Window::interval(QuadScalar(Rational(lo_num, lo_den)), QuadScalar(Rational(hi_num, hi_den)));
}

std::set<RatVector> as_set(const std::vector<RatVector>& v) { return {v.begin(), v.end()}; }

/// Exhaustive li search over every base and every ordered choice of n distinct other points.
bool exists_li_ap(const std::vector<RatVector>& pts, std::size_t n, std::size_t len) {
  const auto members = as_set(pts);
  std::vector<std::size_t> pick(n, 0);
  for (const auto& base : pts) {
    std::function<bool(std::size_t)> rec = [&](std::size_t depth) -> bool {
      if (depth == n) {
        ArithmeticProgression ap{base, {}, len, CoordinateKind::lattice};
        for (auto i : pick) {
          RatVector r = pts[i];
          for (std::size_t k = 0; k < r.size(); ++k) r[k] -= base[k];
          ap.ratios.push_back(r);
        }
        return is_li(ap) && verify_ap(ap, [&](const RatVector& p) { return members.count(p) > 0; });
      }
      for (std::size_t i = 0; i < pts.size(); ++i) {
        pick[depth] = i;
        if (rec(depth + 1)) return true;
      }
      return false;
    };
    if (rec(0)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("enumeration matches the integer-box oracle on random windows") {
  const auto fib = builtin("fibonacci");
  std::mt19937 rng(21);
  std::uniform_int_distribution<long> num(-8, 8);
  std::uniform_int_distribution<long> radius(1, 12);
  for (int trial = 0; trial < 40; ++trial) {
    long a = num(rng), b = num(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    const long r = radius(rng);
    const auto pts = enumerate_model_set(fib, fib_window(a, 4, b, 4), Region::centered(1, r));
    const auto expected = oracle::fib_model_set(r, a, 4, b, 4);
    REQUIRE(pts.size() == expected.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(pts[i].coords == CoordVector{expected[i].first, expected[i].second});
    }
  }
}

TEST_CASE("minimum gaps do not grow with the region") {
  const auto fib = builtin("fibonacci");
  std::optional<QuadScalar> prev;
  for (long r = 2; r <= 30; r += 4) {
    const auto pts = enumerate_model_set(fib, fib_window(0, 1, 1, 1), Region::centered(1, r));
    std::vector<QuadVector> phys;
    for (const auto& p : pts) phys.push_back(p.physical);
    const auto gap = min_squared_gap(phys);
    if (prev) CHECK(gap <= *prev);
    CHECK(gap >= QuadScalar(1));
    prev = gap;
  }
}

TEST_CASE("larger windows give more points") {
  const auto fib = builtin("fibonacci");
  const Region region = Region::centered(1, 15);
  const auto small = enumerate_model_set(fib, fib_window(1, 4, 1, 2), region);
  const auto large = enumerate_model_set(fib, fib_window(0, 1, 1, 1), region);
  for (const auto& p : small) CHECK(std::binary_search(large.begin(), large.end(), p));
}

TEST_CASE("star is additive and refinement rescales coordinates") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<Coord> c(-20, 20);
  for (const char* name : {"fibonacci", "silver_mean", "ammann_beenker"}) {
    const auto cps = builtin(name);
    for (int trial = 0; trial < 20; ++trial) {
      CoordVector z1(cps.rank()), z2(cps.rank()), sum(cps.rank());
      for (std::size_t i = 0; i < cps.rank(); ++i) {
        z1[i] = c(rng);
        z2[i] = c(rng);
        sum[i] = z1[i] + z2[i];
      }
      CHECK(star(cps, sum).internal == star(cps, z1).internal + star(cps, z2).internal);
      CHECK(star(cps, sum).physical == star(cps, z1).physical + star(cps, z2).physical);

      const auto fine = refine_lattice(cps, 3);
      CoordVector scaled(z1);
      for (auto& x : scaled) x *= 3;
      CHECK(fine.physical(scaled) == cps.physical(z1));
      CHECK(fine.internal(scaled) == cps.internal(z1));
    }
  }
}

TEST_CASE("the unit-window Fibonacci set generates the full lattice") {
  const auto fib = builtin("fibonacci");
  const auto pts = enumerate_model_set(fib, fib_window(0, 1, 1, 1), Region::centered(1, 20));
  std::vector<RatVector> coords;
  for (const auto& p : pts) coords.push_back(to_rational(p.coords));
  CHECK(rank_over_q(coords) == 2);
  // Differences already span Z^2: the Smith divisors of the difference rows are all 1.
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    rows.push_back({Integer(pts[i].coords[0] - pts[0].coords[0]), Integer(pts[i].coords[1] - pts[0].coords[1])});
  }
  IntMatrix m(rows.size(), 2);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < 2; ++j) m(i, j) = rows[i][j];
  CHECK(smith_divisors(m) == std::vector<Integer>{1, 1});
}

TEST_CASE("progression rank never exceeds the dimension") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> e(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 3;
    ArithmeticProgression ap{{0, 0}, {}, 1, CoordinateKind::lattice};
    for (std::size_t i = 0; i < n; ++i) ap.ratios.push_back({e(rng), e(rng)});
    CHECK(ap_rank(ap) <= n);
    CHECK(is_li(ap) == (ap_rank(ap) == n));
  }
}

TEST_CASE("embedded rank-1 progressions are proper") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t len = 1; len <= 3; ++len) {
      const auto crt = crt_coefficients(n, len);
      Integer span = 0;
      for (const auto& m : crt.values) span += m * static_cast<unsigned long>(len);
      const LineProgression line{{Rational(1, 2)}, {Rational(3)}, span.get_ui()};
      const auto ap = embed_rank1(line, n, len);
      CHECK(ap_rank(ap) == 1);
      const auto pts = ap_points(ap);
      CHECK(as_set(pts).size() == pts.size());
      CHECK(is_proper(ap));
    }
  }
}

TEST_CASE("brute-force li search is exhaustive on tiny sets") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> coord(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::set<RatVector> s;
    while (s.size() < 6) s.insert({coord(rng), coord(rng)});
    const std::vector<RatVector> pts(s.begin(), s.end());
    for (std::size_t n = 1; n <= 2; ++n) {
      const auto found = brute_force_li_ap(pts, n, 1);
      CHECK(found.has_value() == exists_li_ap(pts, n, 1));
      if (found) CHECK(verify_ap(*found, [&](const RatVector& p) { return s.count(p) > 0; }));
    }
  }
}

TEST_CASE("transferred progressions stay inside the winning color class") {
  std::mt19937 rng(17);
  const ArithmeticProgression ap{{0, 0}, {{1, 0}, {0, 1}}, 8, CoordinateKind::lattice};
  const std::vector<RatVector> translates{{0, 0}, {Rational(1, 2), 0}};
  for (int trial = 0; trial < 10; ++trial) {
    std::map<RatVector, std::size_t> color;
    for (const auto& p : ap_points(ap)) color[p] = rng() % 2;
    const Decomposition d = [&](const RatVector& p) -> std::optional<std::size_t> { return color.at(p); };
    try {
      const auto out = transfer_ap(ap, translates, d, 1);
      CHECK(ap_rank(out.ap) == ap_rank(ap));
      for (const auto& q : ap_points(out.ap)) {
        RatVector p = q;
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += translates[out.translate_index][i];
        REQUIRE(color.count(p));
        CHECK(color.at(p) == out.translate_index);
      }
    } catch (const NoMonoGrid&) {
      // A 9x9 cube can avoid monochromatic squares only rarely; rerunning with a longer input is the caller's job.
    }
  }
}

TEST_CASE("shrunk boxes satisfy the Minkowski containment") {
  std::mt19937 rng(19);
  std::uniform_int_distribution<long> lo(-10, 10);
  std::uniform_int_distribution<long> width(1, 10);
  for (int trial = 0; trial < 50; ++trial) {
    QuadVector a, b;
    for (int i = 0; i < 2; ++i) {
      const long l = lo(rng);
      a.push_back(QuadScalar(Rational(l, 3)));
      b.push_back(QuadScalar(Rational(l, 3)) + QuadScalar(0, Rational(width(rng), 7), 2));
    }
    const Window w = Window::closed_box(a, b);
    for (long m = 1; m <= 8; ++m) CHECK(minkowski_contained(shrink_window(w, m), m, w));
  }
}

TEST_CASE("progressions in model sets have rank at most d+m") {
  const auto fib = builtin("fibonacci");
  const auto pts = enumerate_model_set(fib, fib_window(0, 1, 1, 1), Region::centered(1, 8));
  std::vector<RatVector> coords;
  for (const auto& p : pts) coords.push_back(to_rational(p.coords));
  CHECK_FALSE(brute_force_li_ap(coords, 3, 1));
  const auto two = brute_force_li_ap(coords, 2, 1);
  REQUIRE(two);
  CHECK(ap_rank(*two) <= fib.rank());

  // A fully rational expression sampled in module coordinates behaves the same.
  const MeyerExpr expr(fib, {{QuadVector{QuadScalar(0)}, fib_window(0, 1, 1, 2)},
                             {QuadVector{QuadScalar(Rational(1, 2))}, fib_window(0, 1, 1, 2)}});
  const auto sample = sample_expr(expr, Region::centered(1, 6));
  CHECK_FALSE(brute_force_li_ap(sample, 3, 1));
}

TEST_CASE("integer lattices carry li-progressions of full rank") {
  for (std::size_t d = 1; d <= 3; ++d) {
    const auto zd = integer_lattice(d);
    const MeyerExpr expr(zd, {{QuadVector(d), Window::trivial()}});
    // The default covering sample has 201^d grid points; keep it small in three dimensions.
    ConstructionOptions opts;
    opts.sample_half_width = 2;
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto res = li_ap_in_meyer(expr, n, QuadVector(d), opts);
      CHECK(ap_rank(res.ap) == d);
    }
    CHECK(aprank_bounds(expr, 2, opts).upper == d);
  }
}

TEST_CASE("the upper tag of structured expressions is the scheme rank") {
  const auto fib = builtin("fibonacci");
  for (std::size_t n = 0; n <= 2; ++n) {
    const auto b = aprank_bounds(rank_gap_example(fib, n), 1);
    CHECK(b.upper == fib.rank());
    CHECK(b.upper_tag == UpperBoundTag::theorem_d_plus_m);
    CHECK(b.lower <= b.upper);
  }
}
