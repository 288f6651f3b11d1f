#include "meyerap/scalar.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>
#include <vector>

#include "meyerap/errors.hpp"

namespace meyerap {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

namespace {

bool exact_sqrt(const Rational& q, Rational& out) {
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return false;
  }
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  out = make_rational(n, d);
  return true;
}

// floor(sqrt(q) * 2^bits)
Integer scaled_isqrt(const Rational& q, unsigned bits) {
  Integer scaled = floor_of(q * Rational(Integer(1) << (2 * bits)));
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return root;
}

}  // namespace

Rational sqrt_upper(const Rational& q, unsigned bits) {
  if (q < 0) throw InvalidArgument("square root of a negative rational");
  Rational exact;
  if (exact_sqrt(q, exact)) return exact;
  return make_rational(scaled_isqrt(q, bits) + 1, Integer(1) << bits);
}

Rational sqrt_lower(const Rational& q, unsigned bits) {
  if (q < 0) throw InvalidArgument("square root of a negative rational");
  Rational exact;
  if (exact_sqrt(q, exact)) return exact;
  return make_rational(scaled_isqrt(q, bits), Integer(1) << bits);
}

bool is_square_free(std::int64_t n) {
  if (n < 1) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

QuadScalar::QuadScalar(Rational a, Rational b, std::int64_t radicand)
    : a_(std::move(a)), b_(std::move(b)), radicand_(radicand) {
  if (!is_square_free(radicand_)) {
    throw InvalidArgument("radicand " + std::to_string(radicand_) + " is not a positive square-free integer");
  }
  if (radicand_ == 1) {
    a_ += b_;
    b_ = 0;
  }
}

std::int64_t QuadScalar::merged_radicand(const QuadScalar& o) const {
  if (radicand_ == o.radicand_) return radicand_;
  if (o.is_rational()) return radicand_ != 1 ? radicand_ : o.radicand_;
  if (is_rational()) return o.radicand_;
  throw FieldMismatch("mixing sqrt(" + std::to_string(radicand_) + ") with sqrt(" +
                      std::to_string(o.radicand_) + ")");
}

int quad_sign(const QuadScalar& x) {
  const int sa = sgn(x.rational_part());
  const int sb = sgn(x.radical_part());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 D.
  const Rational a2 = x.rational_part() * x.rational_part();
  const Rational b2d = x.radical_part() * x.radical_part() * Rational(x.radicand());
  const int c = cmp(a2, b2d);
  return sa > 0 ? c : -c;
}

int QuadScalar::sign() const { return quad_sign(*this); }

QuadScalar QuadScalar::conjugate() const {
  QuadScalar r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational QuadScalar::norm() const { return a_ * a_ - b_ * b_ * Rational(radicand_); }

namespace {

std::pair<Rational, Rational> sqrt_bracket(std::int64_t radicand, unsigned bits) {
  const Rational d(radicand);
  return {sqrt_lower(d, bits), sqrt_upper(d, bits)};
}

}  // namespace

Rational QuadScalar::lower_bound(unsigned bits) const {
  if (is_rational()) return a_;
  const auto [lo, hi] = sqrt_bracket(radicand_, bits);
  return sgn(b_) > 0 ? Rational(a_ + b_ * lo) : Rational(a_ + b_ * hi);
}

Rational QuadScalar::upper_bound(unsigned bits) const {
  if (is_rational()) return a_;
  const auto [lo, hi] = sqrt_bracket(radicand_, bits);
  return sgn(b_) > 0 ? Rational(a_ + b_ * hi) : Rational(a_ + b_ * lo);
}

double QuadScalar::to_double() const {
  mpf_class v(0, 256);
  v = mpf_class(a_, 256);
  if (!is_rational()) {
    mpf_class r(radicand_, 256);
    r = sqrt(r);
    v += mpf_class(b_, 256) * r;
  }
  return v.get_d();
}

std::string QuadScalar::to_decimal(int digits) const {
  if (is_zero()) return "0";
  mpf_class v(a_, 320);
  if (!is_rational()) {
    mpf_class r(radicand_, 320);
    r = sqrt(r);
    mpf_class b(b_, 320);
    v += b * r;
  }
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, v.get_mpf_t());
  return std::string(buf.data());
}

std::string QuadScalar::to_literal() const {
  std::ostringstream os;
  os << a_.get_str();
  if (!is_rational()) {
    if (sgn(b_) > 0) {
      os << '+' << b_.get_str();
    } else {
      os << '-' << Rational(-b_).get_str();
    }
    os << "*sqrt(" << radicand_ << ')';
  }
  return os.str();
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  radicand_ = merged_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
  radicand_ = merged_radicand(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& o) {
  const std::int64_t d = merged_radicand(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * Rational(d);
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  radicand_ = d;
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& o) {
  if (o.is_zero()) throw InvalidArgument("division by zero");
  const Rational n = o.norm();
  *this *= o.conjugate();
  a_ /= n;
  b_ /= n;
  return *this;
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

bool operator==(const QuadScalar& x, const QuadScalar& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return x.is_rational() || x.radicand_ == y.radicand_;
}

std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const QuadScalar& x) { return os << x.to_literal(); }

QuadVector operator+(const QuadVector& x, const QuadVector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("vector sum of different dimensions");
  QuadVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
  return r;
}

QuadVector operator-(const QuadVector& x, const QuadVector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("vector difference of different dimensions");
  QuadVector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
  return r;
}

QuadScalar dot(const QuadVector& x, const QuadVector& y) {
  if (x.size() != y.size()) throw DimensionMismatch("dot product of different dimensions");
  QuadScalar s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

QuadScalar squared_norm(const QuadVector& x) { return dot(x, x); }

RatVector flatten(const QuadVector& x) {
  RatVector r;
  r.reserve(2 * x.size());
  for (const auto& c : x) {
    r.push_back(c.rational_part());
    r.push_back(c.radical_part());
  }
  return r;
}

}  // namespace meyerap
