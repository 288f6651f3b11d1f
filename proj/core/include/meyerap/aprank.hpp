#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "meyerap/config.hpp"
#include "meyerap/cps.hpp"
#include "meyerap/progression.hpp"
#include "meyerap/vdw.hpp"

namespace meyerap {

/// A translate outside the quadratic field, tracked as a fresh independent module direction.
/// `approx` is a display-only decimal embedding, one entry per physical axis.
struct SymbolicTranslate {
  std::string tag;
  std::vector<std::string> approx;

  friend bool operator==(const SymbolicTranslate&, const SymbolicTranslate&) = default;
};

using Translate = std::variant<QuadVector, SymbolicTranslate>;

struct Branch {
  Translate translate;
  Window window;
};

/// Finite union of translated model sets over one scheme: the union over j of Λ(W_j) + t_j.
///
/// Points are written in module coordinates: d+m lattice coordinates followed by
/// one coordinate per distinct symbolic tag.
class MeyerExpr {
 public:
  MeyerExpr(CutProjectScheme cps, std::vector<Branch> branches);

  const CutProjectScheme& cps() const noexcept { return cps_; }
  const std::vector<Branch>& branches() const noexcept { return branches_; }
  const std::vector<std::string>& symbolic_tags() const noexcept { return tags_; }
  std::size_t module_dim() const noexcept { return cps_.rank() + tags_.size(); }
  bool fully_rational() const noexcept { return tags_.empty(); }

  /// Module coordinates of the translate of branch j.
  const RatVector& translate_coords(std::size_t j) const { return translate_coords_.at(j); }
  /// Module coordinates of the lattice point z shifted into branch j.
  RatVector module_point(std::size_t j, std::span<const Coord> z) const;
  /// Module coordinates of a bare lattice vector (zero tag part).
  RatVector lattice_vector(std::span<const Coord> z) const;

  /// Minimal branch index containing the point.
  std::optional<std::size_t> branch_of(const RatVector& p) const;
  bool contains(const RatVector& p) const { return branch_of(p).has_value(); }
  bool in_branch(std::size_t j, const RatVector& p) const;

  /// Physical position; nullopt when a symbolic direction is involved.
  std::optional<QuadVector> physical(const RatVector& p) const;
  /// Display-only physical position, using decimal embeddings for symbolic tags.
  std::vector<double> approx_physical(const RatVector& p) const;

 private:
  CutProjectScheme cps_;
  std::vector<Branch> branches_;
  std::vector<std::string> tags_;
  std::vector<std::vector<double>> tag_approx_;
  std::vector<RatVector> translate_coords_;
};

struct ConstructionOptions {
  std::size_t budget = kDefaultPointBudget;
  /// Grid spacing of the covering-radius sample.
  Rational resolution{1, 10};
  /// The covering-radius sample cell is [-w, w]^d.
  Rational sample_half_width{10};
  std::size_t max_retries = 8;
  /// Upper limit for iterative deepening of the progression length.
  std::size_t max_length = 256;
};

struct ShrunkWindows {
  Window inner;  ///< U: base points are drawn from Λ(U)
  Window step;   ///< V: ratios are drawn from Λ(V); symmetric around 0
};

/// Open boxes with U + M*V inside w: V has half-width width/(4M), U is w shrunk by width/4 per side.
ShrunkWindows shrink_window(const Window& w, const Integer& multiple);

/// Exact check of U + M*V ⊆ w for box windows.
bool minkowski_contained(const ShrunkWindows& uv, const Integer& multiple, const Window& w);

/// Empirical radius R' with Λ(u) + B_{R'}(0) covering the sampled cell; not a proof.
Rational covering_radius_certificate(const CutProjectScheme& cps, const Window& u,
                                     const ConstructionOptions& opts = {});

/// The first d+m linearly independent points of Λ(v), by increasing norm.
std::vector<LatticePoint> independent_ratios(const CutProjectScheme& cps, const Window& v,
                                             const ConstructionOptions& opts = {});

struct ModelSetProgression {
  ArithmeticProgression ap;  ///< lattice coordinates
  LatticePoint base;
  std::vector<LatticePoint> ratios;
  Rational radius;           ///< every point lies in B_radius(y)
  Rational covering_radius;
};

/// An li-progression of length N and rank d+m inside Λ(w) ∩ B_R(y), checked exactly.
ModelSetProgression li_ap_in_model_set(const CutProjectScheme& cps, const Window& w, std::size_t length,
                                       const QuadVector& y, const ConstructionOptions& opts = {});

using PointColoring = std::function<std::optional<std::uint32_t>(const LatticePoint&)>;

struct MonoProgression {
  ArithmeticProgression ap;
  std::uint32_t color = 0;
  Grid grid;
  std::size_t searched_length = 0;
};

/// Monochromatic li-progression of length k and rank d+m, by iterative deepening
/// on the length of the host progression.
MonoProgression mono_li_ap(const CutProjectScheme& cps, const Window& w, std::size_t k, const PointColoring& coloring,
                           const QuadVector& y, const ConstructionOptions& opts = {});

struct MeyerProgression {
  ArithmeticProgression ap;  ///< module coordinates
  std::size_t branch = 0;
  /// Radius around y; absent for symbolic translates.
  std::optional<Rational> radius;
};

/// Built inside the first branch and translated by its translate.
MeyerProgression li_ap_in_meyer(const MeyerExpr& expr, std::size_t length, const QuadVector& y,
                                const ConstructionOptions& opts = {});

enum class UpperBoundTag { theorem_d_plus_m, module_rank };

std::string_view to_string(UpperBoundTag t);

struct ApRankBracket {
  std::size_t lower = 0;
  std::size_t upper = 0;
  UpperBoundTag upper_tag = UpperBoundTag::theorem_d_plus_m;
  std::vector<ArithmeticProgression> certificates;
  std::vector<std::size_t> tested_lengths;
};

ApRankBracket aprank_bounds(const MeyerExpr& expr, std::size_t max_length, const ConstructionOptions& opts = {});

/// Bracket for a raw finite sample: upper is the sampled module rank, lower the
/// largest rank certified by exhaustive search at every tested length.
ApRankBracket aprank_bounds_sample(std::span<const RatVector> points, std::size_t max_length,
                                   std::size_t budget = kDefaultPointBudget);

/// Module coordinates of every expression point whose lattice part lies in the region
/// (shifted by the translate for rational branches).
std::vector<RatVector> sample_expr(const MeyerExpr& expr, const Region& region,
                                   std::size_t budget = kDefaultPointBudget);

std::size_t sampled_module_rank(const MeyerExpr& expr, const Region& region,
                                std::size_t budget = kDefaultPointBudget);

/// Λ(W) together with n translates by fresh symbolic directions.
MeyerExpr rank_gap_example(const CutProjectScheme& cps, std::size_t n);
MeyerExpr rank_gap_example(const CutProjectScheme& cps, std::size_t n, const Window& w);

struct RankGap {
  std::size_t branch = 0;
  std::string tag;
};

struct EuclideanizationReport {
  Rational sample_radius;
  std::size_t point_count = 0;
  bool verified = false;
};

struct Euclideanization {
  CutProjectScheme cps;
  Window window;
  Integer multiplier;
  std::vector<QuadVector> lifts;
  EuclideanizationReport report;
};

struct EuclideanizeOptions {
  Rational sample_radius{20};
  std::size_t budget = kDefaultPointBudget;
};

/// A single model set containing the expression, or the first symbolic translate.
std::variant<Euclideanization, RankGap> euclideanize(const MeyerExpr& expr, const EuclideanizeOptions& opts = {});

struct ReverseContainment {
  std::size_t point_count = 0;
  std::size_t outside = 0;
  std::optional<LatticePoint> first_outside;  ///< in the refined scheme
};

/// How many points of the euclideanized model set inside |x| <= radius are also expression points.
ReverseContainment check_reverse_containment(const MeyerExpr& expr, const Euclideanization& e,
                                             const Rational& radius, std::size_t budget = kDefaultPointBudget);

}  // namespace meyerap
