#pragma once

// Gauss-Jordan elimination over an exact field (Rational or QuadScalar).

#include <cstddef>
#include <optional>
#include <vector>

namespace meyerap::detail {

template <class T>
using FieldMatrix = std::vector<std::vector<T>>;

template <class T>
bool field_is_zero(const T& x) {
  return x == T(0);
}

/// Inverse of a square matrix, or nullopt when singular.
template <class T>
std::optional<FieldMatrix<T>> field_inverse(FieldMatrix<T> a) {
  const std::size_t n = a.size();
  FieldMatrix<T> inv(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = T(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && field_is_zero(a[p][col])) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[col]);
    std::swap(inv[p], inv[col]);
    const T piv = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= piv;
      inv[col][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || field_is_zero(a[i][col])) continue;
      const T f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// Some x with x * a = b (a is rows x cols, b has cols entries); nullopt when inconsistent.
/// Free variables are set to zero.
template <class T>
std::optional<std::vector<T>> field_solve_left(const FieldMatrix<T>& a, const std::vector<T>& b) {
  const std::size_t unknowns = a.size();
  const std::size_t equations = b.size();
  // Augmented system a^T x = b.
  FieldMatrix<T> m(equations, std::vector<T>(unknowns + 1, T(0)));
  for (std::size_t e = 0; e < equations; ++e) {
    for (std::size_t u = 0; u < unknowns; ++u) m[e][u] = a[u][e];
    m[e][unknowns] = b[e];
  }
  std::vector<std::size_t> pivot_of_row;
  std::size_t r = 0;
  for (std::size_t col = 0; col < unknowns && r < equations; ++col) {
    std::size_t p = r;
    while (p < equations && field_is_zero(m[p][col])) ++p;
    if (p == equations) continue;
    std::swap(m[p], m[r]);
    const T piv = m[r][col];
    for (auto& x : m[r]) x /= piv;
    for (std::size_t i = 0; i < equations; ++i) {
      if (i == r || field_is_zero(m[i][col])) continue;
      const T f = m[i][col];
      for (std::size_t j = 0; j <= unknowns; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_of_row.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < equations; ++i) {
    if (!field_is_zero(m[i][unknowns])) return std::nullopt;
  }
  std::vector<T> x(unknowns, T(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_of_row[i]] = m[i][unknowns];
  return x;
}

}  // namespace meyerap::detail
