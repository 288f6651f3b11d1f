#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "meyerap/aprank.hpp"
#include "meyerap/cps.hpp"
#include "meyerap/geometry.hpp"
#include "meyerap/progression.hpp"
#include "meyerap/vdw.hpp"

namespace meyerap::io {

using nlohmann::json;

/// Dual form: {"exact": literal, "decimal": 20 significant digits}.
json dual(const QuadScalar& x);
json dual(const Rational& x);
json dual(const QuadVector& x);

/// Integers as JSON numbers when they fit, other rationals as strings.
json rational_json(const Rational& x);
Rational rational_from_json(const json& j);
json rat_vector_json(const RatVector& v);
RatVector rat_vector_from_json(const json& j);

QuadScalar quad_from_json(const json& j);
QuadVector quad_vector_from_json(const json& j);
json quad_vector_json(const QuadVector& v);

/// {"d", "m", "D", "generators": [[physical..., internal...]], "density"}.
///
/// A file can only assume density for m >= 2; a "proved" claim there is read as "assumed".
json cps_to_json(const CutProjectScheme& cps);
CutProjectScheme cps_from_json(const json& j);
/// A built-in name or a path to a scheme file.
CutProjectScheme load_cps(std::string_view spec);

/// {"type": "box" | "ball" | "union", ...} with quad-literal bounds.
json window_to_json(const Window& w);
Window window_from_json(const json& j, std::size_t m);
/// A path to a window file, or an inline window.
Window load_window(std::string_view spec, std::size_t m);

json ap_to_json(const ArithmeticProgression& ap);
ArithmeticProgression ap_from_json(const json& j);

json expr_to_json(const MeyerExpr& expr, const json& cps_ref);
MeyerExpr expr_from_json(const json& j);
MeyerExpr load_expr(std::string_view path);

/// Header `N d r`, then one color per cube point in lexicographic order.
CubeColoring read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const CubeColoring& c);
CubeColoring load_coloring(std::string_view path);

/// One point per line: tab-separated integer coordinates, then decimal physical coordinates.
void write_points(std::ostream& out, std::span<const LatticePoint> points);
/// Reads the leading integer columns of a point file as rational vectors of the given width.
std::vector<RatVector> read_point_coords(std::istream& in, std::size_t width);

json read_json_file(std::string_view path);

}  // namespace meyerap::io
