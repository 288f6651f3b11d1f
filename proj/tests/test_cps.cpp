#include <doctest.h>

#include <algorithm>

#include "meyerap/cps.hpp"
#include "meyerap/errors.hpp"
#include "meyerap/geometry.hpp"
#include "oracles.hpp"

using namespace meyerap;

namespace {

const QuadScalar kPhi(Rational(1, 2), Rational(1, 2), 5);

Window unit_interval() { return Window::interval(QuadScalar(0), QuadScalar(1)); }

std::vector<std::pair<long, long>> coords_of(const std::vector<LatticePoint>& pts) {
  std::vector<std::pair<long, long>> out;
  for (const auto& p : pts) out.emplace_back(p.coords[0], p.coords[1]);
  return out;
}

}  // namespace

TEST_CASE("box windows honour open and closed sides") {
  const Window w = Window::box({QuadScalar(0)}, {QuadScalar(1)}, {true}, {false});
  CHECK(w.contains({QuadScalar(0)}));
  CHECK_FALSE(w.contains({QuadScalar(1)}));
  CHECK(w.contains({kPhi - QuadScalar(1)}));
  CHECK_FALSE(w.contains({kPhi}));
  CHECK_THROWS_AS(Window::interval(QuadScalar(1), QuadScalar(0)), InvalidArgument);
  CHECK_THROWS_AS(w.contains({QuadScalar(0), QuadScalar(0)}), DimensionMismatch);
}

TEST_CASE("ball and union windows") {
  const Window ball = Window::ball({QuadScalar(0), QuadScalar(0)}, Rational(1));
  CHECK(ball.contains({QuadScalar(Rational(3, 5)), QuadScalar(Rational(4, 5))}));
  CHECK_FALSE(ball.contains({QuadScalar(1), QuadScalar(Rational(1, 100))}));

  const Window u = Window::shifted_union({{{QuadScalar(0)}, unit_interval()}, {{QuadScalar(5)}, unit_interval()}});
  CHECK(u.contains({QuadScalar(Rational(11, 2))}));
  CHECK_FALSE(u.contains({QuadScalar(3)}));
  const auto b = u.rational_bounds();
  CHECK(b[0].lo <= 0);
  CHECK(b[0].hi >= 6);

  const Window one = Window::shifted_union({{{QuadScalar(Rational(1, 3))}, unit_interval()}});
  CHECK(one.simplified() == Window::interval(QuadScalar(Rational(1, 3)), QuadScalar(Rational(4, 3))));
}

TEST_CASE("inscribed box of a ball lies inside it") {
  const Window ball = Window::ball({QuadScalar(1), kPhi}, Rational(2));
  const BoxWindow b = ball.inscribed_box();
  const QuadVector corner{b.hi[0], b.hi[1]};
  CHECK(squared_norm(corner - QuadVector{QuadScalar(1), kPhi}) <= QuadScalar(2));
}

TEST_CASE("regions") {
  const Region r = Region::centered(1, Rational(3));
  CHECK(r.contains({QuadScalar(3)}));
  CHECK_FALSE(r.contains({kPhi + QuadScalar(2)}));
  CHECK_THROWS_AS(Region::everything(2).rational_bounds(), UnboundedRegion);
  CHECK(r.translated({QuadScalar(10)}).contains({QuadScalar(12)}));
}

TEST_CASE("built-in schemes validate") {
  const auto fib = builtin("fibonacci");
  const auto v = validate(fib);
  CHECK(v.ok());
  CHECK(v.density == DensityStatus::proved);
  CHECK(fib.determinant() == QuadScalar(0, -1, 5));

  CHECK(validate(builtin("silver_mean")).ok());
  const auto ab = validate(builtin("ammann_beenker"));
  CHECK(ab.ok());
  CHECK(ab.density == DensityStatus::proved);

  const auto z2 = validate(builtin("integer_lattice(2)"));
  CHECK(z2.ok());
  CHECK(z2.density == DensityStatus::vacuous);
  CHECK_THROWS_AS(builtin("penrose"), InvalidArgument);
}

TEST_CASE("validation rejects a degenerate rational lattice") {
  // Generators (1|0) and (0|1): the second has physical part 0, so the projection
  // is not injective, and the internal projection Z is not dense in R.
  const CutProjectScheme cps(1, 1, 1, {{{QuadScalar(1)}, {QuadScalar(0)}}, {{QuadScalar(0)}, {QuadScalar(1)}}});
  const auto v = validate(cps);
  CHECK(v.lattice_invertible);
  CHECK_FALSE(v.projection_injective);
  CHECK(v.density == DensityStatus::failed);
  CHECK_FALSE(v.ok());
}

TEST_CASE("validation for m >= 2 relies on the declared density") {
  auto gens = builtin("ammann_beenker").generators();
  const CutProjectScheme undeclared(2, 2, 2, gens);
  CHECK(validate(undeclared).density == DensityStatus::unverified);
  const CutProjectScheme assumed(2, 2, 2, gens, DensityStatus::assumed);
  CHECK(validate(assumed).density == DensityStatus::assumed);
}

TEST_CASE("scheme construction errors") {
  CHECK_THROWS_AS(CutProjectScheme(1, 1, 5, {{{QuadScalar(1)}, {QuadScalar(1)}}}), DimensionMismatch);
  CHECK_THROWS_AS(CutProjectScheme(1, 1, 5, {{{QuadScalar(1)}, {QuadScalar(1)}}, {{QuadScalar(0, 1, 2)}, {QuadScalar(1)}}}),
                  FieldMismatch);
  const CutProjectScheme singular(1, 1, 5, {{{QuadScalar(1)}, {QuadScalar(1)}}, {{QuadScalar(2)}, {QuadScalar(2)}}});
  CHECK_FALSE(singular.invertible());
  CHECK_THROWS_AS(singular.inverse(), PreconditionViolated);
}

TEST_CASE("star map of fibonacci is the Galois conjugate") {
  const auto fib = builtin("fibonacci");
  const Coord z[] = {3, 5};
  const auto p = star(fib, z);
  CHECK(p.physical[0] == QuadScalar(3) + QuadScalar(5) * kPhi);
  CHECK(p.internal[0] == QuadScalar(Rational(11, 2), Rational(-5, 2), 5));
  CHECK(in_model_set(fib, Window::interval(QuadScalar(Rational(-1, 4)), QuadScalar(Rational(1, 4))), z));
}

TEST_CASE("fibonacci enumeration on |x| <= 3") {
  const auto pts = enumerate_model_set(builtin("fibonacci"), unit_interval(), Region::centered(1, Rational(3)));
  // {-phi, 0, 1, 1 + phi}: the integer oracle gives the same four points.
  CHECK(coords_of(pts) == std::vector<std::pair<long, long>>{{0, -1}, {0, 0}, {1, 0}, {1, 1}});
  auto expected = oracle::fib_model_set(3, 0, 1, 1, 1);
  std::sort(expected.begin(), expected.end());
  CHECK(coords_of(pts) == expected);
}

TEST_CASE("fibonacci enumeration matches the integer oracle") {
  const auto fib = builtin("fibonacci");
  struct Case {
    long r, lo_num, lo_den, hi_num, hi_den;
  };
  for (const auto& c : {Case{30, 0, 1, 1, 1}, Case{20, 0, 1, 1, 2}, Case{25, -1, 3, 2, 5}, Case{10, -3, 1, 2, 1},
                        Case{40, 1, 7, 3, 7}}) {
    const Window w = Window::interval(QuadScalar(Rational(c.lo_num, c.lo_den)), QuadScalar(Rational(c.hi_num, c.hi_den)));
    const auto pts = enumerate_model_set(fib, w, Region::centered(1, Rational(c.r)));
    auto expected = oracle::fib_model_set(c.r, c.lo_num, c.lo_den, c.hi_num, c.hi_den);
    std::sort(expected.begin(), expected.end());
    CHECK(coords_of(pts) == expected);
  }
}

TEST_CASE("enumeration with box regions and budgets") {
  const auto fib = builtin("fibonacci");
  const auto pts = enumerate_model_set(fib, unit_interval(), Region::box({QuadScalar(0)}, {QuadScalar(10)}));
  for (const auto& p : pts) {
    CHECK(p.physical[0] >= QuadScalar(0));
    CHECK(p.physical[0] <= QuadScalar(10));
  }
  CHECK_THROWS_AS(enumerate_model_set(fib, unit_interval(), Region::centered(1, Rational(1000)), 100), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_model_set(fib, unit_interval(), Region::everything(1)), UnboundedRegion);

  const auto z2 = enumerate_model_set(integer_lattice(2), Window::trivial(), Region::centered(2, Rational(1)));
  CHECK(z2.size() == 5);
}

TEST_CASE("ammann-beenker enumeration agrees with a direct scan") {
  const auto ab = builtin("ammann_beenker");
  const Window w = Window::closed_box({QuadScalar(-1), QuadScalar(-1)}, {QuadScalar(1), QuadScalar(1)});
  const Region region = Region::centered(2, Rational(3));
  const auto pts = enumerate_model_set(ab, w, region);
  std::vector<CoordVector> expected;
  for (Coord a = -6; a <= 6; ++a)
    for (Coord b = -6; b <= 6; ++b)
      for (Coord c = -6; c <= 6; ++c)
        for (Coord d = -6; d <= 6; ++d) {
          const Coord z[] = {a, b, c, d};
          if (region.contains(ab.physical(z)) && w.contains(ab.internal(z))) expected.push_back({a, b, c, d});
        }
  std::vector<CoordVector> got;
  for (const auto& p : pts) got.push_back(p.coords);
  CHECK(got == expected);
  CHECK(!got.empty());
}

TEST_CASE("refinement and translate lifting") {
  const auto fib = builtin("fibonacci");
  const auto fine = refine_lattice(fib, 3);
  CHECK(fine.generators()[0].physical[0] == QuadScalar(Rational(1, 3)));
  CHECK(fine.generators()[1].internal[0] == kPhi.conjugate() / QuadScalar(3));
  CHECK(lift_translate(fine, {QuadScalar(Rational(1, 3))}) == QuadVector{QuadScalar(Rational(1, 3))});
  CHECK(lift_translate(fib, {kPhi}) == QuadVector{kPhi.conjugate()});
  CHECK_THROWS_AS(lift_translate(fib, {QuadScalar(Rational(1, 3))}), NotInLattice);
  CHECK_THROWS_AS(lift_translate(fib, {QuadScalar(0, 1, 2)}), NotInLattice);
  CHECK_THROWS_AS(refine_lattice(fib, 0), InvalidArgument);
  const auto z = lattice_coordinates(fib, {QuadScalar(3) + QuadScalar(5) * kPhi});
  REQUIRE(z);
  CHECK(*z == CoordVector{3, 5});
}

TEST_CASE("delone and meyer certificates for fibonacci") {
  const auto fib = builtin("fibonacci");
  const Region region = Region::centered(1, Rational(30));
  const auto pts = enumerate_model_set(fib, unit_interval(), region);
  const auto cert = delone_certificate(pts, region);
  CHECK(cert.min_gap_sq == QuadScalar(1));
  // Largest gap is phi^2 = 1 + phi; the grid sees it up to twice the resolution.
  const QuadScalar phi2 = kPhi + QuadScalar(1);
  CHECK(QuadScalar(cert.max_gap_bound) <= phi2 + QuadScalar(Rational(1, 1000)));
  CHECK(QuadScalar(cert.max_gap_bound) >= phi2 - QuadScalar(2 * cert.resolution));
  // Floating oracle: smallest spacing in the sorted difference set.
  std::vector<double> diffs;
  for (const auto& p : pts)
    for (const auto& q : pts) diffs.push_back(p.physical[0].to_double() - q.physical[0].to_double());
  std::sort(diffs.begin(), diffs.end());
  double best = 1e9;
  for (std::size_t i = 1; i < diffs.size(); ++i) {
    if (diffs[i] - diffs[i - 1] > 1e-9) best = std::min(best, diffs[i] - diffs[i - 1]);
  }
  CHECK(meyer_certificate(pts).to_double() == doctest::Approx(best * best).epsilon(1e-9));
}

TEST_CASE("min squared gap") {
  const std::vector<QuadVector> pts{{QuadScalar(0)}, {kPhi}, {QuadScalar(1)}};
  CHECK(min_squared_gap(pts) == (kPhi - QuadScalar(1)) * (kPhi - QuadScalar(1)));
  CHECK_THROWS_AS(min_squared_gap(std::vector<QuadVector>{{QuadScalar(0)}}), PreconditionViolated);
}
