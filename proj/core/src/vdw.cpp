#include "meyerap/vdw.hpp"

#include <stdexcept>

#include "meyerap/errors.hpp"

namespace meyerap {

namespace {

bool next_multiplier(std::vector<std::size_t>& m, std::size_t max) {
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] < max) {
      ++m[i];
      return true;
    }
    m[i] = 0;
  }
  return false;
}

}  // namespace

std::vector<CubePoint> grid_points(const Grid& g) {
  if (g.steps.size() != g.offsets.size()) throw DimensionMismatch("grid offsets and steps differ in length");
  std::vector<CubePoint> out;
  std::vector<std::size_t> m(g.dim(), 0);
  do {
    CubePoint p(g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j) p[j] = g.offsets[j] + m[j] * g.steps[j];
    out.push_back(std::move(p));
  } while (next_multiplier(m, g.depth));
  return out;
}

CubeColoring::CubeColoring(std::size_t side, std::size_t dim, std::size_t num_colors,
                           std::vector<std::uint32_t> colors)
    : side_(side), dim_(dim), num_colors_(num_colors), colors_(std::move(colors)) {
  if (num_colors_ == 0) throw InvalidArgument("a coloring needs at least one color");
  std::size_t expected = 1;
  for (std::size_t j = 0; j < dim_; ++j) expected *= side_ + 1;
  if (colors_.size() != expected) {
    throw DimensionMismatch("coloring lists " + std::to_string(colors_.size()) + " points, cube has " +
                            std::to_string(expected));
  }
  for (auto c : colors_) {
    if (c >= num_colors_) throw InvalidArgument("color " + std::to_string(c) + " is out of range");
  }
}

std::size_t CubeColoring::index(std::span<const std::size_t> point) const {
  if (point.size() != dim_) throw DimensionMismatch("cube point has the wrong dimension");
  std::size_t idx = 0;
  for (std::size_t c : point) {
    if (c > side_) throw InvalidArgument("cube point outside [0, N]^d");
    idx = idx * (side_ + 1) + c;
  }
  return idx;
}

std::uint32_t CubeColoring::color(std::span<const std::size_t> point) const { return colors_[index(point)]; }

namespace {

bool is_mono(const CubeColoring& coloring, const Grid& g, std::uint32_t color) {
  std::vector<std::size_t> m(g.dim(), 0);
  CubePoint p(g.dim());
  do {
    for (std::size_t j = 0; j < g.dim(); ++j) p[j] = g.offsets[j] + m[j] * g.steps[j];
    if (coloring.color(p) != color) return false;
  } while (next_multiplier(m, g.depth));
  return true;
}

}  // namespace

std::optional<Grid> find_mono_grid(const CubeColoring& coloring, std::size_t depth) {
  const std::size_t d = coloring.dim();
  const std::size_t side = coloring.side();
  Grid g{std::vector<std::size_t>(d, 0), std::vector<std::size_t>(d, 1), depth};
  if (depth == 0) return g;
  if (depth > side) return std::nullopt;

  do {
    bool fits = true;
    for (std::size_t j = 0; j < d; ++j) fits = fits && g.offsets[j] + depth <= side;
    if (!fits) continue;
    const std::uint32_t color = coloring.color(g.offsets);
    // Steps run lexicographically over 1 <= k_j <= (N - l_j) / depth.
    std::vector<std::size_t> max_step(d);
    for (std::size_t j = 0; j < d; ++j) max_step[j] = (side - g.offsets[j]) / depth;
    std::fill(g.steps.begin(), g.steps.end(), 1);
    auto next_steps = [&] {
      for (std::size_t j = d; j-- > 0;) {
        if (g.steps[j] < max_step[j]) {
          ++g.steps[j];
          return true;
        }
        g.steps[j] = 1;
      }
      return false;
    };
    do {
      if (is_mono(coloring, g, color)) return g;
    } while (next_steps());
  } while (next_multiplier(g.offsets, side));
  return std::nullopt;
}

TransferResult transfer_ap(const ArithmeticProgression& ap, std::span<const RatVector> translates,
                           const Decomposition& decompose, std::size_t target_length) {
  if (translates.empty()) throw InvalidArgument("transfer needs at least one translate");
  if (!is_li(ap)) throw PreconditionViolated("transfer needs an li-progression");
  for (const auto& f : translates) {
    if (f.size() != ap.base.size()) throw DimensionMismatch("translate dimension differs from the progression");
  }

  const auto points = ap_points(ap);
  std::vector<std::uint32_t> colors;
  colors.reserve(points.size());
  for (const auto& p : points) {
    const auto j = decompose(p);
    if (!j) throw PreconditionViolated("decomposition is undefined on a progression point");
    if (*j >= translates.size()) throw InvalidArgument("decomposition returned an unknown translate index");
    colors.push_back(static_cast<std::uint32_t>(*j));
  }
  const CubeColoring coloring(ap.length, ap.dimension(), translates.size(), std::move(colors));
  const auto grid = find_mono_grid(coloring, target_length);
  if (!grid) {
    throw NoMonoGrid("no monochromatic grid of depth " + std::to_string(target_length) + " in [0," +
                     std::to_string(ap.length) + "]^" + std::to_string(ap.dimension()));
  }
  const std::size_t winner = coloring.color(grid->offsets);
  if (!is_mono(coloring, *grid, static_cast<std::uint32_t>(winner))) {
    throw std::logic_error("grid search returned a non-monochromatic grid");
  }

  TransferResult out{ArithmeticProgression{ap.point(grid->offsets), {}, target_length, ap.kind}, winner, *grid};
  for (std::size_t i = 0; i < out.ap.base.size(); ++i) out.ap.base[i] -= translates[winner][i];
  for (std::size_t j = 0; j < ap.dimension(); ++j) {
    RatVector r = ap.ratios[j];
    const Rational k(static_cast<unsigned long>(grid->steps[j]));
    for (auto& x : r) x *= k;
    out.ap.ratios.push_back(std::move(r));
  }
  return out;
}

}  // namespace meyerap
