#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "meyerap/config.hpp"
#include "meyerap/geometry.hpp"
#include "meyerap/scalar.hpp"

namespace meyerap {

using Coord = std::int64_t;
using CoordVector = std::vector<Coord>;

enum class DensityStatus { proved, assumed, unverified, failed, vacuous };

std::string_view to_string(DensityStatus s);
DensityStatus density_from_string(std::string_view s);

/// One lattice generator split into its physical (R^d) and internal (R^m) parts.
struct Generator {
  QuadVector physical;
  QuadVector internal;
};

/// A lattice point together with its physical position and its star image.
struct LatticePoint {
  CoordVector coords;
  QuadVector physical;
  QuadVector internal;

  friend bool operator==(const LatticePoint& x, const LatticePoint& y) { return x.coords == y.coords; }
  friend std::strong_ordering operator<=>(const LatticePoint& x, const LatticePoint& y) {
    return x.coords <=> y.coords;
  }
};

/// Fully Euclidean cut-and-project scheme R^d x R^m with a rank-(d+m) lattice
/// whose coordinates live in Q(sqrt(D)).
class CutProjectScheme {
 public:
  CutProjectScheme(std::size_t d, std::size_t m, std::int64_t radicand, std::vector<Generator> generators,
                   DensityStatus declared_density = DensityStatus::unverified);

  std::size_t d() const noexcept { return d_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t rank() const noexcept { return d_ + m_; }
  std::int64_t radicand() const noexcept { return radicand_; }
  const std::vector<Generator>& generators() const noexcept { return generators_; }
  DensityStatus declared_density() const noexcept { return declared_density_; }

  /// Lattice determinant (zero iff the generators do not span R^{d+m}).
  const QuadScalar& determinant() const noexcept { return determinant_; }
  bool invertible() const noexcept { return !determinant_.is_zero(); }
  /// Inverse of the full generator matrix; rows index full-space axes.
  const std::vector<QuadVector>& inverse() const;

  QuadVector physical(std::span<const Coord> z) const;
  QuadVector internal(std::span<const Coord> z) const;

  /// Rational coordinates of a physical vector over the generators, when it lies in their Q-span.
  std::optional<RatVector> rational_coordinates(const QuadVector& physical) const;

  friend bool operator==(const CutProjectScheme& x, const CutProjectScheme& y);

 private:
  std::size_t d_;
  std::size_t m_;
  std::int64_t radicand_;
  std::vector<Generator> generators_;
  DensityStatus declared_density_;
  QuadScalar determinant_;
  std::vector<QuadVector> inverse_;
};

struct ValidationReport {
  bool lattice_invertible = false;
  bool projection_injective = false;
  DensityStatus density = DensityStatus::unverified;

  bool ok() const noexcept {
    return lattice_invertible && projection_injective && density != DensityStatus::failed;
  }
};

ValidationReport validate(const CutProjectScheme& cps);

/// The lattice point with integer coordinates z, carrying x and x*.
LatticePoint star(const CutProjectScheme& cps, std::span<const Coord> z);

/// All lattice points with physical part in the region and internal part in the window,
/// sorted by integer coordinates. Throws BudgetExceeded past `budget` candidates.
std::vector<LatticePoint> enumerate_model_set(const CutProjectScheme& cps, const Window& w, const Region& region,
                                              std::size_t budget = kDefaultPointBudget);

bool in_model_set(const CutProjectScheme& cps, const Window& w, std::span<const Coord> z);

/// Same scheme with every generator divided by n; the old lattice becomes a sublattice.
CutProjectScheme refine_lattice(const CutProjectScheme& cps, Coord n);

/// Integer coordinates of a physical vector, when it is a lattice point.
std::optional<CoordVector> lattice_coordinates(const CutProjectScheme& cps, const QuadVector& physical);

/// Internal part g of the unique lattice point (t, g); throws NotInLattice.
QuadVector lift_translate(const CutProjectScheme& cps, const QuadVector& t);

/// fibonacci, silver_mean, ammann_beenker, integer_lattice(d).
CutProjectScheme builtin(std::string_view name);
CutProjectScheme integer_lattice(std::size_t d);

struct DeloneCertificate {
  QuadScalar min_gap_sq;
  /// Largest empty-ball diameter seen on the sampling grid (exact up to the grid resolution).
  Rational max_gap_bound;
  Rational resolution;
};

DeloneCertificate delone_certificate(std::span<const LatticePoint> points, const Region& region,
                                     const Rational& resolution = Rational(1, 10));

/// Minimum squared distance between distinct elements of the sampled difference set.
/// This is a finite-radius certificate only.
QuadScalar meyer_certificate(std::span<const LatticePoint> points);

/// Exact minimum squared distance between distinct physical points.
QuadScalar min_squared_gap(std::span<const QuadVector> points);

}  // namespace meyerap
