#pragma once

#include <cstddef>
#include <string_view>

#include "meyerap/geometry.hpp"
#include "meyerap/scalar.hpp"

namespace meyerap {

/// `<rat>` = optional sign, integer, optional `/` positive integer.
Rational parse_rational(std::string_view text);

/// `<rat>`, `<rat>+<rat>*sqrt(<D>)` or `<rat>-<rat>*sqrt(<D>)`; whitespace is ignored.
/// Throws ParseError carrying the offending offset.
QuadScalar parse_quad_literal(std::string_view text);

/// Inline window: a product of intervals such as `[0,1]`, `(1/4,3/4]x[0,1]`,
/// a ball `|y-(c_1,...,c_m)|<=r` / `|y|<=r`, or `trivial` for the zero-dimensional window.
Window parse_window(std::string_view text, std::size_t m);

/// Inline region: `|x|<=r`, `|x-(c_1,...,c_d)|<=r` (a bare literal center is allowed
/// when d = 1), or a closed box `[lo,hi]x[lo,hi]...`.
Region parse_region(std::string_view text, std::size_t d);

}  // namespace meyerap
