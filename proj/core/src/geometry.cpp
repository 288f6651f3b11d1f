#include "meyerap/geometry.hpp"

#include <algorithm>

#include "meyerap/errors.hpp"

namespace meyerap {

namespace {

void check_box(const QuadVector& lo, const QuadVector& hi, std::size_t flags_lo, std::size_t flags_hi) {
  if (lo.size() != hi.size() || lo.size() != flags_lo || lo.size() != flags_hi) {
    throw DimensionMismatch("box bounds and flags must share a dimension");
  }
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (!(lo[i] < hi[i])) throw InvalidArgument("box axis " + std::to_string(i) + " has lo >= hi");
  }
}

}  // namespace

Window Window::box(QuadVector lo, QuadVector hi, std::vector<bool> lo_closed, std::vector<bool> hi_closed) {
  check_box(lo, hi, lo_closed.size(), hi_closed.size());
  const std::size_t dim = lo.size();
  return Window(BoxWindow{std::move(lo), std::move(hi), std::move(lo_closed), std::move(hi_closed)}, dim);
}

Window Window::closed_box(QuadVector lo, QuadVector hi) {
  const std::size_t n = lo.size();
  return box(std::move(lo), std::move(hi), std::vector<bool>(n, true), std::vector<bool>(n, true));
}

Window Window::open_box(QuadVector lo, QuadVector hi) {
  const std::size_t n = lo.size();
  return box(std::move(lo), std::move(hi), std::vector<bool>(n, false), std::vector<bool>(n, false));
}

Window Window::interval(QuadScalar lo, QuadScalar hi, bool lo_closed, bool hi_closed) {
  return box({std::move(lo)}, {std::move(hi)}, {lo_closed}, {hi_closed});
}

Window Window::trivial() { return Window(BoxWindow{}, 0); }

Window Window::ball(QuadVector center, Rational radius_sq) {
  if (radius_sq <= 0) throw InvalidArgument("ball window needs a positive squared radius");
  const std::size_t dim = center.size();
  return Window(BallWindow{std::move(center), std::move(radius_sq)}, dim);
}

Window Window::shifted_union(std::vector<std::pair<QuadVector, Window>> parts) {
  if (parts.empty()) throw InvalidArgument("shifted union needs at least one part");
  const std::size_t dim = parts.front().second.dim();
  UnionWindow u;
  for (auto& [shift, w] : parts) {
    if (shift.size() != dim || w.dim() != dim) throw DimensionMismatch("union parts must share a dimension");
    u.parts.push_back({std::move(shift), std::make_shared<const Window>(std::move(w))});
  }
  return Window(std::move(u), dim);
}

bool Window::contains(const QuadVector& x) const {
  if (x.size() != dim_) throw DimensionMismatch("window membership in the wrong dimension");
  return std::visit(
      [&](const auto& s) -> bool {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, BoxWindow>) {
          for (std::size_t i = 0; i < x.size(); ++i) {
            const int above = (x[i] - s.lo[i]).sign();
            if (above < 0 || (above == 0 && !s.lo_closed[i])) return false;
            const int below = (s.hi[i] - x[i]).sign();
            if (below < 0 || (below == 0 && !s.hi_closed[i])) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<S, BallWindow>) {
          return squared_norm(x - s.center) <= QuadScalar(s.radius_sq);
        } else {
          return std::any_of(s.parts.begin(), s.parts.end(),
                             [&](const ShiftedPart& p) { return p.base->contains(x - p.shift); });
        }
      },
      shape_);
}

RationalBox Window::rational_bounds() const {
  return std::visit(
      [&](const auto& s) -> RationalBox {
        using S = std::decay_t<decltype(s)>;
        RationalBox out(dim_);
        if constexpr (std::is_same_v<S, BoxWindow>) {
          for (std::size_t i = 0; i < dim_; ++i) out[i] = {s.lo[i].lower_bound(), s.hi[i].upper_bound()};
        } else if constexpr (std::is_same_v<S, BallWindow>) {
          const Rational r = sqrt_upper(s.radius_sq);
          for (std::size_t i = 0; i < dim_; ++i) {
            out[i] = {s.center[i].lower_bound() - r, s.center[i].upper_bound() + r};
          }
        } else {
          bool first = true;
          for (const auto& p : s.parts) {
            const auto inner = p.base->rational_bounds();
            for (std::size_t i = 0; i < dim_; ++i) {
              const Rational lo = inner[i].lo + p.shift[i].lower_bound();
              const Rational hi = inner[i].hi + p.shift[i].upper_bound();
              if (first || lo < out[i].lo) out[i].lo = lo;
              if (first || hi > out[i].hi) out[i].hi = hi;
            }
            first = false;
          }
        }
        return out;
      },
      shape_);
}

BoxWindow Window::inscribed_box() const {
  return std::visit(
      [&](const auto& s) -> BoxWindow {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, BoxWindow>) {
          return s;
        } else if constexpr (std::is_same_v<S, BallWindow>) {
          // Open cube of half-width h with dim * h^2 <= r^2 lies inside the ball.
          BoxWindow b;
          const Rational h = sqrt_lower(s.radius_sq / Rational(static_cast<long>(dim_)));
          for (const auto& c : s.center) {
            b.lo.push_back(c - QuadScalar(h));
            b.hi.push_back(c + QuadScalar(h));
          }
          b.lo_closed.assign(dim_, false);
          b.hi_closed.assign(dim_, false);
          return b;
        } else {
          const auto& first = s.parts.front();
          BoxWindow b = first.base->inscribed_box();
          for (std::size_t i = 0; i < dim_; ++i) {
            b.lo[i] += first.shift[i];
            b.hi[i] += first.shift[i];
          }
          return b;
        }
      },
      shape_);
}

Window Window::simplified() const {
  const auto* u = std::get_if<UnionWindow>(&shape_);
  if (u == nullptr || u->parts.size() != 1) return *this;
  const Window inner = u->parts.front().base->simplified();
  if (inner.as_box() == nullptr) return *this;
  return translate(inner, u->parts.front().shift);
}

bool operator==(const Window& x, const Window& y) {
  if (x.dim_ != y.dim_ || x.shape_.index() != y.shape_.index()) return false;
  if (const auto* a = std::get_if<BoxWindow>(&x.shape_)) {
    const auto& b = std::get<BoxWindow>(y.shape_);
    return a->lo == b.lo && a->hi == b.hi && a->lo_closed == b.lo_closed && a->hi_closed == b.hi_closed;
  }
  if (const auto* a = std::get_if<BallWindow>(&x.shape_)) {
    const auto& b = std::get<BallWindow>(y.shape_);
    return a->center == b.center && a->radius_sq == b.radius_sq;
  }
  const auto& a = std::get<UnionWindow>(x.shape_);
  const auto& b = std::get<UnionWindow>(y.shape_);
  if (a.parts.size() != b.parts.size()) return false;
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    if (a.parts[i].shift != b.parts[i].shift || !(*a.parts[i].base == *b.parts[i].base)) return false;
  }
  return true;
}

Window translate(const Window& w, const QuadVector& shift) {
  if (shift.size() != w.dim()) throw DimensionMismatch("window translate in the wrong dimension");
  if (const auto* b = w.as_box()) {
    return Window::box(b->lo + shift, b->hi + shift, b->lo_closed, b->hi_closed);
  }
  if (const auto* b = std::get_if<BallWindow>(&w.shape())) {
    return Window::ball(b->center + shift, b->radius_sq);
  }
  return Window::shifted_union({{shift, w}});
}

Region Region::ball(QuadVector center, Rational radius_sq) {
  if (radius_sq < 0) throw InvalidArgument("region needs a nonnegative squared radius");
  const std::size_t dim = center.size();
  return Region(Ball{std::move(center), std::move(radius_sq)}, dim);
}

Region Region::centered(std::size_t d, const Rational& radius) {
  if (radius < 0) throw InvalidArgument("region needs a nonnegative radius");
  return ball(QuadVector(d), radius * radius);
}

Region Region::box(QuadVector lo, QuadVector hi) {
  if (lo.size() != hi.size()) throw DimensionMismatch("region box bounds differ in dimension");
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (hi[i] < lo[i]) throw InvalidArgument("region box axis " + std::to_string(i) + " has lo > hi");
  }
  const std::size_t dim = lo.size();
  return Region(Box{std::move(lo), std::move(hi)}, dim);
}

Region Region::everything(std::size_t d) { return Region(Everything{d}, d); }

bool Region::contains(const QuadVector& x) const {
  if (x.size() != dim_) throw DimensionMismatch("region membership in the wrong dimension");
  if (const auto* b = std::get_if<Ball>(&shape_)) return squared_norm(x - b->center) <= QuadScalar(b->radius_sq);
  if (const auto* b = std::get_if<Box>(&shape_)) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] < b->lo[i] || b->hi[i] < x[i]) return false;
    }
    return true;
  }
  return true;
}

RationalBox Region::rational_bounds() const {
  RationalBox out(dim_);
  if (const auto* b = std::get_if<Ball>(&shape_)) {
    const Rational r = sqrt_upper(b->radius_sq);
    for (std::size_t i = 0; i < dim_; ++i) out[i] = {b->center[i].lower_bound() - r, b->center[i].upper_bound() + r};
    return out;
  }
  if (const auto* b = std::get_if<Box>(&shape_)) {
    for (std::size_t i = 0; i < dim_; ++i) out[i] = {b->lo[i].lower_bound(), b->hi[i].upper_bound()};
    return out;
  }
  throw UnboundedRegion("cannot bound the whole physical space");
}

Region Region::translated(const QuadVector& shift) const {
  if (const auto* b = std::get_if<Ball>(&shape_)) return ball(b->center + shift, b->radius_sq);
  if (const auto* b = std::get_if<Box>(&shape_)) return box(b->lo + shift, b->hi + shift);
  return *this;
}

}  // namespace meyerap
