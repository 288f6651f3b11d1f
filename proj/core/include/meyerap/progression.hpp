#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "meyerap/config.hpp"
#include "meyerap/cps.hpp"
#include "meyerap/scalar.hpp"

namespace meyerap {

/// Integer lattice coordinates, or rational coordinates in a module basis
/// (lattice generators, optionally extended by symbolic translate directions).
enum class CoordinateKind { lattice, module };

/// Points base + sum c_i * ratio_i over all c in {0, ..., length}^n.
struct ArithmeticProgression {
  RatVector base;
  std::vector<RatVector> ratios;
  std::size_t length = 0;
  CoordinateKind kind = CoordinateKind::lattice;

  std::size_t dimension() const noexcept { return ratios.size(); }
  RatVector point(std::span<const std::size_t> coefficients) const;

  friend bool operator==(const ArithmeticProgression&, const ArithmeticProgression&) = default;
};

using Membership = std::function<bool(const RatVector&)>;

RatVector to_rational(std::span<const Coord> z);
/// Integer coordinates when every entry is integral and fits 64 bits.
std::optional<CoordVector> to_coords(const RatVector& v);

/// (length + 1)^n, or BudgetExceeded when it passes the budget.
std::size_t point_count(const ArithmeticProgression& ap, std::size_t budget = kDefaultPointBudget);

/// All points, lexicographic in the coefficient tuple (first coefficient most significant).
std::vector<RatVector> ap_points(const ArithmeticProgression& ap, std::size_t budget = kDefaultPointBudget);

bool is_proper(const ArithmeticProgression& ap, std::size_t budget = kDefaultPointBudget);

/// Rank of the module generated by the ratios.
std::size_t ap_rank(const ArithmeticProgression& ap);
inline bool is_li(const ArithmeticProgression& ap) { return ap_rank(ap) == ap.dimension(); }

/// Minimal CRT multipliers: m_i = 1 mod p_i and 0 mod p_j (j != i) for the n smallest primes > N.
struct CrtCoefficients {
  std::size_t n = 0;
  std::size_t length = 0;
  std::vector<Integer> primes;
  std::vector<Integer> values;
};

CrtCoefficients crt_coefficients(std::size_t n, std::size_t length);

/// One-dimensional progression start + c * ratio, 0 <= c <= length.
struct LineProgression {
  RatVector start;
  RatVector ratio;
  std::size_t length = 0;
};

/// Proper rank-1 progression of dimension n inside the line, with ratios m_j * ratio.
ArithmeticProgression embed_rank1(const LineProgression& line, std::size_t n, std::size_t length);

/// First li-progression of dimension n and the given length inside a finite point set.
///
/// Bases are scanned in sorted order; ratios are differences p - base taken in
/// sorted order with strictly increasing indices. Exhaustive within the set.
std::optional<ArithmeticProgression> brute_force_li_ap(std::span<const RatVector> points, std::size_t n,
                                                       std::size_t length,
                                                       std::size_t budget = kDefaultPointBudget);

bool verify_ap(const ArithmeticProgression& ap, const Membership& member,
               const Membership& in_region = nullptr, std::size_t budget = kDefaultPointBudget);

}  // namespace meyerap
