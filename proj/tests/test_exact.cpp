#include <doctest.h>

#include <random>

#include "meyerap/errors.hpp"
#include "meyerap/linalg.hpp"
#include "meyerap/scalar.hpp"
#include "oracles.hpp"

using namespace meyerap;

namespace {

std::vector<std::vector<mpz_class>> to_mpz(const IntMatrix& m) {
  std::vector<std::vector<mpz_class>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m.row(i);
  return out;
}

std::vector<RatVector> to_rat(const IntMatrix& m) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    RatVector r;
    for (const auto& x : m.row(i)) r.emplace_back(x);
    out.push_back(r);
  }
  return out;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int spread) {
  std::uniform_int_distribution<int> dist(-spread, spread);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST_CASE("quad_sign decides by exact integer comparison") {
  CHECK(quad_sign(QuadScalar(1, 0, 5)) == 1);
  CHECK(quad_sign(QuadScalar(7, -3, 5)) == 1);
  CHECK(quad_sign(QuadScalar(2, -1, 5)) == -1);
  CHECK(quad_sign(QuadScalar(0)) == 0);
  CHECK(quad_sign(QuadScalar(Rational(-1, 3), Rational(1, 7), 2)) == -1);
}

TEST_CASE("quad_sign agrees with 256-bit floating evaluation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 50);
  const std::int64_t radicands[] = {2, 3, 5, 6, 7, 10, 13};
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t d = radicands[i % 7];
    const Rational a(num(rng), den(rng));
    const Rational b(num(rng), den(rng));
    const QuadScalar x(make_rational(a.get_num(), a.get_den()), make_rational(b.get_num(), b.get_den()), d);
    mpf_class fa(x.rational_part(), 256), fb(x.radical_part(), 256), root(0, 256);
    mpf_sqrt_ui(root.get_mpf_t(), static_cast<unsigned long>(d));
    const mpf_class v = fa + fb * root;
    CHECK(quad_sign(x) == sgn(v));
  }
}

TEST_CASE("QuadScalar field operations") {
  const QuadScalar phi(Rational(1, 2), Rational(1, 2), 5);
  CHECK(phi * phi == phi + QuadScalar(1));
  CHECK(phi * phi.conjugate() == QuadScalar(-1));
  CHECK(phi.norm() == -1);
  CHECK((QuadScalar(3) / phi) * phi == QuadScalar(3));
  CHECK(QuadScalar(1, 1, 1) == QuadScalar(2));
  CHECK_THROWS_AS(QuadScalar(0, 1, 2) + QuadScalar(0, 1, 3), FieldMismatch);
  CHECK_THROWS_AS(QuadScalar(0, 1, 4), InvalidArgument);
  CHECK(phi.to_literal() == "1/2+1/2*sqrt(5)");
  CHECK(phi.conjugate().to_literal() == "1/2-1/2*sqrt(5)");
  CHECK(phi.to_decimal(20) == "1.6180339887498948482");
  CHECK(QuadScalar(2) < phi + QuadScalar(1));
}

TEST_CASE("square-root brackets are tight and exact on squares") {
  CHECK(sqrt_upper(Rational(9, 4)) == Rational(3, 2));
  CHECK(sqrt_lower(Rational(9, 4)) == Rational(3, 2));
  for (long q : {2L, 3L, 5L, 1000003L}) {
    const Rational hi = sqrt_upper(Rational(q));
    const Rational lo = sqrt_lower(Rational(q));
    CHECK(hi * hi >= q);
    CHECK(lo * lo <= q);
    CHECK(hi - lo <= Rational(1, 1) / Rational(Integer(1) << 63));
  }
}

TEST_CASE("rank_over_q examples") {
  CHECK(rank_over_q(std::vector<RatVector>{{1, 0}, {0, 1}, {1, 1}}) == 2);
  CHECK(rank_over_q(std::vector<RatVector>{}) == 0);
  CHECK(rank_over_q(std::vector<RatVector>{{3, 5}, {5, 8}}) == 2);
  CHECK_THROWS_AS(rank_over_q(std::vector<RatVector>{{1, 0}, {1}}), DimensionMismatch);
}

TEST_CASE("max_li_subset examples") {
  CHECK(max_li_subset(std::vector<RatVector>{{1, 0}, {2, 0}, {0, 1}}) == std::vector<std::size_t>{0, 2});
  CHECK(max_li_subset(std::vector<RatVector>{{0, 0}}).empty());
  CHECK(max_li_subset(std::vector<RatVector>{{3, 5}, {6, 10}, {5, 8}}) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("rank matches the largest nonvanishing minor") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + trial % 4;
    const std::size_t cols = 1 + (trial / 4) % 4;
    IntMatrix m = random_matrix(rng, rows, cols, trial % 3 == 0 ? 1 : 4);
    const auto vecs = to_rat(m);
    const auto r = rank_over_q(vecs);
    CHECK(r == oracle::minor_rank(to_mpz(m)));
    CHECK(max_li_subset(vecs).size() == r);
    CHECK(r <= cols);
  }
}

TEST_CASE("smith divisors match minor gcd quotients") {
  CHECK(smith_divisors(IntMatrix{{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
  CHECK(smith_divisors(IntMatrix::identity(2)) == std::vector<Integer>{1, 1});
  CHECK(smith_divisors(IntMatrix{{1, 1}, {1, -1}}) == std::vector<Integer>{1, 2});

  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const IntMatrix m = random_matrix(rng, n, n, 6);
    const auto divs = smith_divisors(m);
    const auto mz = to_mpz(m);
    REQUIRE(divs.size() == oracle::minor_rank(mz));
    Integer product = 1;
    for (std::size_t k = 0; k < divs.size(); ++k) {
      CHECK(divs[k] > 0);
      if (k > 0) CHECK(divs[k] % divs[k - 1] == 0);
      product *= divs[k];
      CHECK(product == oracle::minor_gcd(mz, k + 1));
    }
  }
}

TEST_CASE("hermite normal form is a unimodular row reduction") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 1 + trial % 3, cols = 1 + (trial / 3) % 3;
    const IntMatrix a = random_matrix(rng, rows, cols, 5);
    const auto hf = hermite_normal_form(a);
    CHECK(hf.h == hf.transform * a);
    CHECK(hf.pivot_cols.size() == oracle::minor_rank(to_mpz(a)));
    // Same row module: every row of A is an integer combination of the rows of H.
    if (!hf.pivot_cols.empty()) {
      for (std::size_t i = 0; i < rows; ++i) CHECK(solve_integer_combination(hf.h, a.row(i)));
    }
    for (std::size_t i = 0; i < hf.pivot_cols.size(); ++i) {
      const auto c = hf.pivot_cols[i];
      CHECK(hf.h(i, c) > 0);
      if (i > 0) CHECK(hf.pivot_cols[i - 1] < c);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(hf.h(k, c) >= 0);
        CHECK(hf.h(k, c) < hf.h(i, c));
      }
    }
  }
}

TEST_CASE("integer combinations are solved exactly") {
  const IntMatrix a{{2, 0}, {0, 3}};
  const std::vector<Integer> six_e1{6, 0};
  const auto x = solve_integer_combination(a, six_e1);
  REQUIRE(x);
  CHECK((*x)[0] == 3);
  CHECK((*x)[1] == 0);
  const std::vector<Integer> e1{1, 0};
  CHECK_FALSE(solve_integer_combination(a, e1));
}

TEST_CASE("submodule multiplier") {
  CHECK(submodule_multiplier(IntMatrix{{2, 0}, {0, 3}}) == 6);
  CHECK(submodule_multiplier(IntMatrix::identity(3)) == 1);
  CHECK(submodule_multiplier(IntMatrix{{1, 1}, {1, -1}}) == 2);
  CHECK_THROWS_AS(submodule_multiplier(IntMatrix{{1, 1}, {2, 2}}), RankDeficient);

  // n * e_i must be an integer combination of the rows; checked through Cramer's rule.
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = random_matrix(rng, 2, 2, 5);
    const auto az = to_mpz(a);
    const mpz_class det = oracle::laplace_det(az);
    if (det == 0) continue;
    const Integer n = submodule_multiplier(a);
    for (int i = 0; i < 2; ++i) {
      // x * A = n e_i  =>  x = n e_i A^{-1} = n * row i of adj(A) / det.
      const mpz_class adj_row[2] = {i == 0 ? az[1][1] : mpz_class(-az[1][0]), i == 0 ? mpz_class(-az[0][1]) : az[0][0]};
      for (const auto& c : adj_row) CHECK(mpz_class(n * c) % det == 0);
    }
  }
}
