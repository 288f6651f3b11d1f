#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "meyerap/scalar.hpp"

namespace meyerap {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> row(std::size_t i) const;
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);

/// Dimension of the Q-span, by fraction-free (Bareiss) elimination.
std::size_t rank_over_q(std::span<const RatVector> vectors);

/// Indices of the first maximal linearly independent subset in scan order.
std::vector<std::size_t> max_li_subset(std::span<const RatVector> vectors);

/// Row-style Hermite normal form H = U * A with U unimodular.
///
/// H keeps only the nonzero rows: pivots strictly increase by column, are
/// positive, and entries above each pivot are reduced into [0, pivot).
struct HermiteForm {
  IntMatrix h;
  IntMatrix transform;  ///< rows(h) x rows(A); h = transform * A
  std::vector<std::size_t> pivot_cols;
};

HermiteForm hermite_normal_form(const IntMatrix& a);

/// Integer x with x * A = target, when target lies in the row module of A.
std::optional<std::vector<Integer>> solve_integer_combination(const IntMatrix& a,
                                                              std::span<const Integer> target);

/// Elementary divisors d_1 | d_2 | ... | d_r of the Smith normal form (r = rank).
std::vector<Integer> smith_divisors(const IntMatrix& m);

/// Smallest elementary-divisor multiplier n with n * Z^cols inside the row module.
///
/// Throws RankDeficient when the row rank is below the column count.
Integer submodule_multiplier(const IntMatrix& gens_in_basis);

}  // namespace meyerap
