#include "meyerap/literal.hpp"

#include <cctype>
#include <string>

#include "meyerap/errors.hpp"

namespace meyerap {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t pos() const noexcept { return pos_; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Rational rational(Cursor& c) {
  bool negative = false;
  if (c.accept("-")) {
    negative = true;
  } else {
    c.accept("+");
  }
  Integer num(c.digits());
  Integer den = 1;
  if (c.accept("/")) {
    const std::size_t at = c.pos();
    den = Integer(c.digits());
    if (den == 0) throw ParseError("zero denominator", at);
  }
  if (negative) num = -num;
  return make_rational(num, den);
}

/// A signed rational followed, optionally, by `(+|-)<rat>*sqrt(<D>)`.
QuadScalar quad(Cursor& c) {
  const Rational a = rational(c);
  const char next = c.peek();
  if (next != '+' && next != '-') return QuadScalar(a);
  const bool minus = next == '-';
  c.accept(minus ? "-" : "+");
  Rational b = rational(c);
  if (minus) b = -b;
  c.expect("*");
  c.expect("sqrt(");
  const std::size_t at = c.pos();
  const std::string digits = c.digits();
  if (digits.size() > 18) throw ParseError("radicand is too large", at);
  const std::int64_t radicand = std::stoll(digits);
  c.expect(")");
  if (!is_square_free(radicand)) throw ParseError("radicand must be a positive square-free integer", at);
  return QuadScalar(a, b, radicand);
}

QuadVector tuple(Cursor& c) {
  QuadVector v;
  if (c.accept("(")) {
    do {
      v.push_back(quad(c));
    } while (c.accept(","));
    c.expect(")");
  } else {
    v.push_back(quad(c));
  }
  return v;
}

/// `|<var>|<=r` or `|<var>-<center>|<=r`; returns (center, radius).
std::pair<QuadVector, Rational> ball(Cursor& c, std::string_view var, std::size_t dim) {
  c.expect("|");
  c.expect(var);
  QuadVector center(dim);
  if (c.accept("-")) {
    const std::size_t at = c.pos();
    center = tuple(c);
    if (center.size() != dim) {
      throw ParseError("center has " + std::to_string(center.size()) + " coordinates, expected " +
                           std::to_string(dim),
                       at);
    }
  }
  c.expect("|");
  c.expect("<=");
  const std::size_t at = c.pos();
  Rational r = rational(c);
  if (r < 0) throw ParseError("radius must be nonnegative", at);
  c.finish();
  return {std::move(center), std::move(r)};
}

}  // namespace

Rational parse_rational(std::string_view text) {
  Cursor c(text);
  Rational r = rational(c);
  c.finish();
  return r;
}

QuadScalar parse_quad_literal(std::string_view text) {
  Cursor c(text);
  QuadScalar q = quad(c);
  c.finish();
  return q;
}

Window parse_window(std::string_view text, std::size_t m) {
  Cursor c(text);
  if (c.accept("trivial")) {
    c.finish();
    if (m != 0) throw DimensionMismatch("the trivial window needs internal dimension 0");
    return Window::trivial();
  }
  if (c.peek() == '|') {
    auto [center, r] = ball(c, "y", m);
    if (r == 0) throw ParseError("ball window needs a positive radius", text.size());
    return Window::ball(std::move(center), r * r);
  }
  QuadVector lo, hi;
  std::vector<bool> lo_closed, hi_closed;
  do {
    if (c.accept("[")) {
      lo_closed.push_back(true);
    } else if (c.accept("(")) {
      lo_closed.push_back(false);
    } else {
      c.fail("expected '[' or '('");
    }
    lo.push_back(quad(c));
    c.expect(",");
    const std::size_t at = c.pos();
    hi.push_back(quad(c));
    if (!(lo.back() < hi.back())) throw ParseError("interval has lo >= hi", at);
    if (c.accept("]")) {
      hi_closed.push_back(true);
    } else if (c.accept(")")) {
      hi_closed.push_back(false);
    } else {
      c.fail("expected ']' or ')'");
    }
  } while (c.accept("x"));
  c.finish();
  if (lo.size() != m) {
    throw DimensionMismatch("window has " + std::to_string(lo.size()) + " axes, internal dimension is " +
                            std::to_string(m));
  }
  return Window::box(std::move(lo), std::move(hi), std::move(lo_closed), std::move(hi_closed));
}

Region parse_region(std::string_view text, std::size_t d) {
  Cursor c(text);
  if (c.peek() == '|') {
    auto [center, r] = ball(c, "x", d);
    return Region::ball(std::move(center), r * r);
  }
  QuadVector lo, hi;
  do {
    c.expect("[");
    lo.push_back(quad(c));
    c.expect(",");
    const std::size_t at = c.pos();
    hi.push_back(quad(c));
    if (hi.back() < lo.back()) throw ParseError("interval has lo > hi", at);
    c.expect("]");
  } while (c.accept("x"));
  c.finish();
  if (lo.size() != d) {
    throw DimensionMismatch("region has " + std::to_string(lo.size()) + " axes, physical dimension is " +
                            std::to_string(d));
  }
  return Region::box(std::move(lo), std::move(hi));
}

}  // namespace meyerap
