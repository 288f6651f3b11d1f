#pragma once

#include <cstddef>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "meyerap/scalar.hpp"

namespace meyerap {

/// Closed rational interval [lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;
};

using RationalBox = std::vector<RationalInterval>;

class Window;

/// Axis-aligned box with explicit open/closed flags per side.
/// A box with zero axes is the trivial window of an internal space R^0.
struct BoxWindow {
  QuadVector lo;
  QuadVector hi;
  std::vector<bool> lo_closed;
  std::vector<bool> hi_closed;
};

/// Closed Euclidean ball given by its squared radius.
struct BallWindow {
  QuadVector center;
  Rational radius_sq;
};

struct ShiftedPart {
  QuadVector shift;
  std::shared_ptr<const Window> base;
};

/// Finite union of translated windows.
struct UnionWindow {
  std::vector<ShiftedPart> parts;
};

/// Precompact region of internal space with nonempty interior and exact membership.
class Window {
 public:
  using Variant = std::variant<BoxWindow, BallWindow, UnionWindow>;

  static Window box(QuadVector lo, QuadVector hi, std::vector<bool> lo_closed, std::vector<bool> hi_closed);
  static Window closed_box(QuadVector lo, QuadVector hi);
  static Window open_box(QuadVector lo, QuadVector hi);
  static Window interval(QuadScalar lo, QuadScalar hi, bool lo_closed = true, bool hi_closed = true);
  /// The single window of the internal space R^0.
  static Window trivial();
  static Window ball(QuadVector center, Rational radius_sq);
  static Window shifted_union(std::vector<std::pair<QuadVector, Window>> parts);

  std::size_t dim() const noexcept { return dim_; }
  const Variant& shape() const noexcept { return shape_; }
  const BoxWindow* as_box() const noexcept { return std::get_if<BoxWindow>(&shape_); }

  bool contains(const QuadVector& x) const;
  /// Outward rational bounding box.
  RationalBox rational_bounds() const;
  /// An open box inside the window, used where exact box arithmetic is needed.
  BoxWindow inscribed_box() const;
  /// Collapses a one-part union over a box into the translated box.
  Window simplified() const;

  friend bool operator==(const Window& x, const Window& y);

 private:
  Window(Variant v, std::size_t dim) : shape_(std::move(v)), dim_(dim) {}

  Variant shape_;
  std::size_t dim_ = 0;
};

Window translate(const Window& w, const QuadVector& shift);

/// Physical-space region: a closed ball, a closed box, or all of R^d.
class Region {
 public:
  struct Ball {
    QuadVector center;
    Rational radius_sq;
  };
  struct Box {
    QuadVector lo;
    QuadVector hi;
  };
  struct Everything {
    std::size_t dim;
  };
  using Variant = std::variant<Ball, Box, Everything>;

  static Region ball(QuadVector center, Rational radius_sq);
  /// Closed ball of the given radius around the origin of R^d.
  static Region centered(std::size_t d, const Rational& radius);
  static Region box(QuadVector lo, QuadVector hi);
  static Region everything(std::size_t d);

  std::size_t dim() const noexcept { return dim_; }
  const Variant& shape() const noexcept { return shape_; }
  bool bounded() const noexcept { return !std::holds_alternative<Everything>(shape_); }

  bool contains(const QuadVector& x) const;
  /// Outward rational bounding box; throws UnboundedRegion for all of R^d.
  RationalBox rational_bounds() const;
  Region translated(const QuadVector& shift) const;

 private:
  Region(Variant v, std::size_t dim) : shape_(std::move(v)), dim_(dim) {}

  Variant shape_;
  std::size_t dim_ = 0;
};

}  // namespace meyerap
