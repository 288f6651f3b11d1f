#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "meyerap/progression.hpp"

namespace meyerap {

using CubePoint = std::vector<std::size_t>;

/// Points (offsets_j + m_j * steps_j) for m in {0, ..., depth}^dim.
struct Grid {
  std::vector<std::size_t> offsets;
  std::vector<std::size_t> steps;
  std::size_t depth = 0;

  std::size_t dim() const noexcept { return offsets.size(); }
  friend bool operator==(const Grid&, const Grid&) = default;
};

/// Lexicographic in the multiplier tuple.
std::vector<CubePoint> grid_points(const Grid& g);

/// A total coloring of the cube {0, ..., N}^d with colors in {0, ..., r - 1}.
class CubeColoring {
 public:
  /// `colors` lists the cube points in lexicographic order.
  CubeColoring(std::size_t side, std::size_t dim, std::size_t num_colors, std::vector<std::uint32_t> colors);

  std::size_t side() const noexcept { return side_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_colors() const noexcept { return num_colors_; }
  const std::vector<std::uint32_t>& colors() const noexcept { return colors_; }

  std::uint32_t color(std::span<const std::size_t> point) const;
  std::size_t index(std::span<const std::size_t> point) const;

 private:
  std::size_t side_;
  std::size_t dim_;
  std::size_t num_colors_;
  std::vector<std::uint32_t> colors_;
};

/// First monochromatic grid of the given depth inside the cube, searching
/// offsets lexicographically, then steps lexicographically.
std::optional<Grid> find_mono_grid(const CubeColoring& coloring, std::size_t depth);

/// Index of the translate f with p - f in the target set, or nullopt when p is uncovered.
using Decomposition = std::function<std::optional<std::size_t>(const RatVector&)>;

struct TransferResult {
  ArithmeticProgression ap;
  std::size_t translate_index = 0;
  Grid grid;
};

/// Moves an li-progression across a finite-translate covering: colors the
/// coefficient cube by translate index, finds a monochromatic grid of depth
/// `target_length`, and rebases onto the winning translate.
///
/// Throws NoMonoGrid when the input progression is too short; callers retry
/// with a longer one.
TransferResult transfer_ap(const ArithmeticProgression& ap, std::span<const RatVector> translates,
                           const Decomposition& decompose, std::size_t target_length);

}  // namespace meyerap
