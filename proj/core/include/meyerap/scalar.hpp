#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace meyerap {

using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

/// Smallest rational of the form k / 2^bits that is >= sqrt(q), exact when q is a perfect square.
Rational sqrt_upper(const Rational& q, unsigned bits = 64);
/// Largest rational of the form k / 2^bits that is <= sqrt(q), exact when q is a perfect square.
Rational sqrt_lower(const Rational& q, unsigned bits = 64);

bool is_square_free(std::int64_t n);

/// Exact real number a + b*sqrt(D) with rational a, b and square-free D >= 1.
///
/// D = 1 denotes the rational field; the radical part is folded into a.
/// Values with b = 0 interoperate with any radicand. Mixing two values with
/// nonzero radical parts over different radicands throws FieldMismatch.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(Rational a, Rational b, std::int64_t radicand);

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& radical_part() const noexcept { return b_; }
  std::int64_t radicand() const noexcept { return radicand_; }
  bool is_rational() const noexcept { return sgn(b_) == 0; }
  bool is_zero() const noexcept { return sgn(a_) == 0 && sgn(b_) == 0; }

  /// Exact sign of the real value.
  int sign() const;

  QuadScalar conjugate() const;
  /// Field norm a^2 - b^2 D.
  Rational norm() const;

  Rational lower_bound(unsigned bits = 64) const;
  Rational upper_bound(unsigned bits = 64) const;

  double to_double() const;
  /// Informative decimal rendering with the given number of significant digits.
  std::string to_decimal(int digits = 20) const;
  /// Canonical literal: "a" or "a+b*sqrt(D)" / "a-b*sqrt(D)".
  std::string to_literal() const;

  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o);
  QuadScalar& operator/=(const QuadScalar& o);

  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
  friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }
  QuadScalar operator-() const;

  friend bool operator==(const QuadScalar& x, const QuadScalar& y);
  /// Real-number order.
  friend std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y);

 private:
  std::int64_t merged_radicand(const QuadScalar& o) const;

  Rational a_{0};
  Rational b_{0};
  std::int64_t radicand_ = 1;
};

std::ostream& operator<<(std::ostream& os, const QuadScalar& x);

/// Sign of a + b*sqrt(D), decided by integer comparison of a^2 and b^2 D.
int quad_sign(const QuadScalar& x);

using QuadVector = std::vector<QuadScalar>;

QuadVector operator+(const QuadVector& x, const QuadVector& y);
QuadVector operator-(const QuadVector& x, const QuadVector& y);
QuadScalar dot(const QuadVector& x, const QuadVector& y);
QuadScalar squared_norm(const QuadVector& x);

/// Coefficients (a_1, b_1, a_2, b_2, ...) of each coordinate over the Q-basis {1, sqrt(D)}.
RatVector flatten(const QuadVector& x);

}  // namespace meyerap
