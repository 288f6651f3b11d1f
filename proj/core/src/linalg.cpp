#include "meyerap/linalg.hpp"

#include <algorithm>
#include <utility>

#include "meyerap/errors.hpp"

namespace meyerap {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw InvalidArgument("matrix dimensions must be positive");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : IntMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    std::size_t j = 0;
    for (long v : r) (*this)(i, j++) = v;
    ++i;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
  if (rows.empty()) throw InvalidArgument("matrix dimensions must be positive");
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols() != y.rows()) throw DimensionMismatch("matrix product shape mismatch");
  IntMatrix r(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t k = 0; k < x.cols(); ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols(); ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

namespace {

std::size_t common_dimension(std::span<const RatVector> vectors) {
  if (vectors.empty()) return 0;
  const std::size_t dim = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != dim) throw DimensionMismatch("vectors of different dimensions");
  }
  return dim;
}

// Clears denominators; the result spans the same line.
std::vector<Integer> integer_row(const RatVector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> r;
  r.reserve(v.size());
  for (const auto& q : v) r.push_back(q.get_num() * (l / q.get_den()));
  return r;
}

void divide_by_content(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

std::size_t rank_over_q(std::span<const RatVector> vectors) {
  const std::size_t cols = common_dimension(vectors);
  if (cols == 0) return 0;
  std::vector<std::vector<Integer>> m;
  m.reserve(vectors.size());
  for (const auto& v : vectors) m.push_back(integer_row(v));

  // Bareiss: after step k every active entry is a (k+1)-minor, so the division is exact.
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t p = rank;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    const Integer& piv = m[rank][col];
    for (std::size_t i = rank + 1; i < m.size(); ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        Integer t = piv * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][col] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

std::vector<std::size_t> max_li_subset(std::span<const RatVector> vectors) {
  const std::size_t cols = common_dimension(vectors);
  struct Echelon {
    std::size_t pivot;
    std::vector<Integer> row;
  };
  std::vector<Echelon> basis;
  std::vector<std::size_t> chosen;
  for (std::size_t idx = 0; idx < vectors.size(); ++idx) {
    auto v = integer_row(vectors[idx]);
    for (const auto& b : basis) {
      if (v[b.pivot] == 0) continue;
      const Integer scale_v = b.row[b.pivot];
      const Integer scale_b = v[b.pivot];
      for (std::size_t j = 0; j < cols; ++j) v[j] = scale_v * v[j] - scale_b * b.row[j];
      divide_by_content(v);
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    if (nz == v.end()) continue;
    basis.push_back({static_cast<std::size_t>(nz - v.begin()), std::move(v)});
    chosen.push_back(idx);
  }
  return chosen;
}

namespace {

void row_combine(IntMatrix& m, std::size_t r, std::size_t i, const Integer& s, const Integer& t,
                 const Integer& u, const Integer& w) {
  // [row_r; row_i] <- [s t; u w] [row_r; row_i]
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer nr = s * m(r, j) + t * m(i, j);
    Integer ni = u * m(r, j) + w * m(i, j);
    m(r, j) = std::move(nr);
    m(i, j) = std::move(ni);
  }
}

void row_axpy(IntMatrix& m, std::size_t target, const Integer& q, std::size_t source) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) -= q * m(source, j);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (h(i, col) == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h(r, col).get_mpz_t(), h(i, col).get_mpz_t());
      const Integer uu = -h(i, col) / g;
      const Integer ww = h(r, col) / g;
      row_combine(h, r, i, s, t, uu, ww);
      row_combine(u, r, i, s, t, uu, ww);
    }
    if (h(r, col) == 0) continue;
    if (h(r, col) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t k = 0; k < r; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(k, col).get_mpz_t(), h(r, col).get_mpz_t());
      if (q == 0) continue;
      row_axpy(h, k, q, r);
      row_axpy(u, k, q, r);
    }
    pivots.push_back(col);
    ++r;
  }
  if (r == 0) {
    // Zero matrix: keep a single zero row so the shape stays valid.
    return {IntMatrix(1, a.cols()), IntMatrix(1, a.rows()), {}};
  }
  IntMatrix hh(r, a.cols());
  IntMatrix uu(r, a.rows());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) hh(i, j) = h(i, j);
    for (std::size_t j = 0; j < a.rows(); ++j) uu(i, j) = u(i, j);
  }
  return {std::move(hh), std::move(uu), std::move(pivots)};
}

std::optional<std::vector<Integer>> solve_integer_combination(const IntMatrix& a,
                                                              std::span<const Integer> target) {
  if (target.size() != a.cols()) throw DimensionMismatch("target dimension differs from column count");
  const HermiteForm hf = hermite_normal_form(a);
  std::vector<Integer> residual(target.begin(), target.end());
  std::vector<Integer> y(hf.pivot_cols.size());
  for (std::size_t k = 0; k < hf.pivot_cols.size(); ++k) {
    const std::size_t p = hf.pivot_cols[k];
    if (!mpz_divisible_p(residual[p].get_mpz_t(), hf.h(k, p).get_mpz_t())) return std::nullopt;
    y[k] = residual[p] / hf.h(k, p);
    for (std::size_t j = 0; j < a.cols(); ++j) residual[j] -= y[k] * hf.h(k, j);
  }
  if (std::any_of(residual.begin(), residual.end(), [](const Integer& x) { return x != 0; })) {
    return std::nullopt;
  }
  std::vector<Integer> x(a.rows());
  for (std::size_t k = 0; k < y.size(); ++k) {
    for (std::size_t j = 0; j < a.rows(); ++j) x[j] += y[k] * hf.transform(k, j);
  }
  return x;
}

std::vector<Integer> smith_divisors(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<Integer> divisors;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Bring the smallest nonzero entry of the trailing block to (t, t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (m(i, j) == 0) continue;
          if (bi == rows || abs(m(i, j)) < abs(m(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == rows) return divisors;
      m.swap_rows(t, bi);
      m.swap_cols(t, bj);

      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        const Integer q = m(i, t) / m(t, t);
        row_axpy(m, i, q, t);
        if (m(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        const Integer q = m(t, j) / m(t, t);
        for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Row and column are clear; enforce divisibility of the trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(m(i, j).get_mpz_t(), m(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
        }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) m(t, j) += m(bad, j);
    }
    divisors.push_back(abs(m(t, t)));
  }
  return divisors;
}

Integer submodule_multiplier(const IntMatrix& gens_in_basis) {
  const auto divisors = smith_divisors(gens_in_basis);
  if (divisors.size() < gens_in_basis.cols()) {
    throw RankDeficient("generator rank " + std::to_string(divisors.size()) + " is below ambient rank " +
                        std::to_string(gens_in_basis.cols()));
  }
  return divisors.back();
}

}  // namespace meyerap
