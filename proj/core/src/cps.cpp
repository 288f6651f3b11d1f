#include "meyerap/cps.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <set>

#include "field_elimination.hpp"
#include "meyerap/errors.hpp"
#include "meyerap/linalg.hpp"

namespace meyerap {

std::string_view to_string(DensityStatus s) {
  switch (s) {
    case DensityStatus::proved: return "proved";
    case DensityStatus::assumed: return "assumed";
    case DensityStatus::unverified: return "unverified";
    case DensityStatus::failed: return "failed";
    case DensityStatus::vacuous: return "vacuous";
  }
  return "unverified";
}

DensityStatus density_from_string(std::string_view s) {
  if (s == "proved") return DensityStatus::proved;
  if (s == "assumed") return DensityStatus::assumed;
  if (s == "unverified") return DensityStatus::unverified;
  if (s == "failed") return DensityStatus::failed;
  if (s == "vacuous") return DensityStatus::vacuous;
  throw InvalidArgument("unknown density status '" + std::string(s) + "'");
}

namespace {

QuadScalar field_determinant(detail::FieldMatrix<QuadScalar> a) {
  const std::size_t n = a.size();
  QuadScalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col].is_zero()) ++p;
    if (p == n) return QuadScalar(0);
    if (p != col) {
      std::swap(a[p], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      const QuadScalar f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

detail::FieldMatrix<QuadScalar> full_matrix(const std::vector<Generator>& gens) {
  detail::FieldMatrix<QuadScalar> g;
  g.reserve(gens.size());
  for (const auto& gen : gens) {
    QuadVector row = gen.physical;
    row.insert(row.end(), gen.internal.begin(), gen.internal.end());
    g.push_back(std::move(row));
  }
  return g;
}

void check_radicand(const QuadScalar& x, std::int64_t radicand) {
  if (!x.is_rational() && x.radicand() != radicand) {
    throw FieldMismatch("generator coordinate " + x.to_literal() + " is outside Q(sqrt(" +
                        std::to_string(radicand) + "))");
  }
}

}  // namespace

CutProjectScheme::CutProjectScheme(std::size_t d, std::size_t m, std::int64_t radicand,
                                   std::vector<Generator> generators, DensityStatus declared_density)
    : d_(d), m_(m), radicand_(radicand), generators_(std::move(generators)), declared_density_(declared_density) {
  if (d_ == 0) throw InvalidArgument("physical dimension must be positive");
  if (!is_square_free(radicand_)) throw InvalidArgument("radicand must be a positive square-free integer");
  if (generators_.size() != d_ + m_) {
    throw DimensionMismatch("expected " + std::to_string(d_ + m_) + " generators, got " +
                            std::to_string(generators_.size()));
  }
  for (const auto& g : generators_) {
    if (g.physical.size() != d_ || g.internal.size() != m_) throw DimensionMismatch("generator has wrong shape");
    for (const auto& x : g.physical) check_radicand(x, radicand_);
    for (const auto& x : g.internal) check_radicand(x, radicand_);
  }
  const auto g = full_matrix(generators_);
  determinant_ = field_determinant(g);
  if (auto inv = detail::field_inverse(g)) inverse_ = std::move(*inv);
}

const std::vector<QuadVector>& CutProjectScheme::inverse() const {
  if (!invertible()) throw PreconditionViolated("generators do not form a lattice (zero determinant)");
  return inverse_;
}

QuadVector CutProjectScheme::physical(std::span<const Coord> z) const {
  if (z.size() != rank()) throw DimensionMismatch("lattice coordinates have the wrong length");
  QuadVector x(d_);
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (z[k] == 0) continue;
    const QuadScalar c(z[k]);
    for (std::size_t i = 0; i < d_; ++i) x[i] += c * generators_[k].physical[i];
  }
  return x;
}

QuadVector CutProjectScheme::internal(std::span<const Coord> z) const {
  if (z.size() != rank()) throw DimensionMismatch("lattice coordinates have the wrong length");
  QuadVector x(m_);
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (z[k] == 0) continue;
    const QuadScalar c(z[k]);
    for (std::size_t i = 0; i < m_; ++i) x[i] += c * generators_[k].internal[i];
  }
  return x;
}

std::optional<RatVector> CutProjectScheme::rational_coordinates(const QuadVector& physical) const {
  if (physical.size() != d_) throw DimensionMismatch("physical vector has the wrong dimension");
  for (const auto& x : physical) {
    if (!x.is_rational() && x.radicand() != radicand_) return std::nullopt;
  }
  detail::FieldMatrix<Rational> a;
  for (const auto& g : generators_) a.push_back(flatten(g.physical));
  return detail::field_solve_left(a, flatten(physical));
}

bool operator==(const CutProjectScheme& x, const CutProjectScheme& y) {
  if (x.d_ != y.d_ || x.m_ != y.m_ || x.radicand_ != y.radicand_) return false;
  for (std::size_t k = 0; k < x.generators_.size(); ++k) {
    if (x.generators_[k].physical != y.generators_[k].physical ||
        x.generators_[k].internal != y.generators_[k].internal) {
      return false;
    }
  }
  return true;
}

ValidationReport validate(const CutProjectScheme& cps) {
  ValidationReport r;
  r.lattice_invertible = cps.invertible();

  std::vector<RatVector> phys;
  for (const auto& g : cps.generators()) phys.push_back(flatten(g.physical));
  r.projection_injective = rank_over_q(phys) == cps.rank();

  if (cps.m() == 0) {
    r.density = DensityStatus::vacuous;
    return r;
  }
  // A finitely generated subgroup of R is dense iff it has Q-rank >= 2; a
  // coordinate projection of rank <= 1 is cyclic, so the projection is not dense.
  bool some_axis_cyclic = false;
  for (std::size_t axis = 0; axis < cps.m(); ++axis) {
    std::vector<RatVector> values;
    for (const auto& g : cps.generators()) values.push_back(flatten({g.internal[axis]}));
    if (rank_over_q(values) <= 1) some_axis_cyclic = true;
  }
  if (some_axis_cyclic) {
    r.density = DensityStatus::failed;
  } else if (cps.m() == 1) {
    r.density = DensityStatus::proved;
  } else if (cps.declared_density() == DensityStatus::proved || cps.declared_density() == DensityStatus::assumed) {
    r.density = cps.declared_density();
  } else {
    r.density = DensityStatus::unverified;
  }
  return r;
}

LatticePoint star(const CutProjectScheme& cps, std::span<const Coord> z) {
  return {CoordVector(z.begin(), z.end()), cps.physical(z), cps.internal(z)};
}

bool in_model_set(const CutProjectScheme& cps, const Window& w, std::span<const Coord> z) {
  return w.contains(cps.internal(z));
}

namespace {

constexpr unsigned kBracketBits = 64;

Coord to_coord(const Integer& v) {
  if (!v.fits_slong_p()) throw BudgetExceeded("lattice coordinate bound exceeds 64 bits");
  return v.get_si();
}

RationalInterval interval_product(const RationalInterval& x, const RationalInterval& y) {
  const Rational c[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

}  // namespace

std::vector<LatticePoint> enumerate_model_set(const CutProjectScheme& cps, const Window& w, const Region& region,
                                              std::size_t budget) {
  if (!region.bounded()) throw UnboundedRegion("model set enumeration needs a bounded physical region");
  if (region.dim() != cps.d()) throw DimensionMismatch("region dimension differs from physical dimension");
  if (w.dim() != cps.m()) throw DimensionMismatch("window dimension differs from internal dimension");

  const std::size_t n = cps.rank();
  const std::size_t d = cps.d();
  RationalBox full = region.rational_bounds();
  const RationalBox wb = w.rational_bounds();
  full.insert(full.end(), wb.begin(), wb.end());

  // Outward integer bounds for each lattice coordinate: z = p * G^{-1}.
  const auto& inv = cps.inverse();
  std::vector<Coord> zlo(n), zhi(n);
  for (std::size_t k = 0; k < n; ++k) {
    RationalInterval acc{0, 0};
    for (std::size_t i = 0; i < n; ++i) {
      const RationalInterval g{inv[i][k].lower_bound(kBracketBits), inv[i][k].upper_bound(kBracketBits)};
      const auto t = interval_product(full[i], g);
      acc.lo += t.lo;
      acc.hi += t.hi;
    }
    zlo[k] = to_coord(floor_of(acc.lo));
    zhi[k] = to_coord(ceil_of(acc.hi));
  }

  std::size_t prefixes = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const auto width = static_cast<std::size_t>(zhi[k] - zlo[k] + 1);
    if (width > budget || prefixes > budget / width) {
      throw BudgetExceeded("enumeration box exceeds the point budget of " + std::to_string(budget));
    }
    prefixes *= width;
  }

  const auto& gens = cps.generators();
  const Generator& last = gens[n - 1];
  QuadVector last_full = last.physical;
  last_full.insert(last_full.end(), last.internal.begin(), last.internal.end());

  std::vector<LatticePoint> out;
  std::size_t visited = 0;
  CoordVector z(zlo.begin(), zlo.end());
  for (;;) {
    // Partial sums of the fixed prefix in every full-space axis.
    QuadVector partial(n);
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (z[k] == 0) continue;
      const QuadScalar c(z[k]);
      for (std::size_t i = 0; i < d; ++i) partial[i] += c * gens[k].physical[i];
      for (std::size_t i = 0; i < cps.m(); ++i) partial[d + i] += c * gens[k].internal[i];
    }
    // Narrow the last coordinate using every axis where it acts.
    Coord lo = zlo[n - 1];
    Coord hi = zhi[n - 1];
    for (std::size_t i = 0; i < n && lo <= hi; ++i) {
      const QuadScalar& g = last_full[i];
      if (g.is_zero()) continue;
      QuadScalar a = (QuadScalar(full[i].lo) - partial[i]) / g;
      QuadScalar b = (QuadScalar(full[i].hi) - partial[i]) / g;
      if (b < a) std::swap(a, b);
      lo = std::max(lo, to_coord(floor_of(a.lower_bound(kBracketBits))));
      hi = std::min(hi, to_coord(ceil_of(b.upper_bound(kBracketBits))));
    }
    ++visited;
    for (Coord t = lo; t <= hi; ++t) {
      if (++visited > budget) throw BudgetExceeded("enumeration exceeded the point budget of " + std::to_string(budget));
      z[n - 1] = t;
      QuadVector x(partial.begin(), partial.begin() + static_cast<std::ptrdiff_t>(d));
      QuadVector y(partial.begin() + static_cast<std::ptrdiff_t>(d), partial.end());
      const QuadScalar c(t);
      for (std::size_t i = 0; i < d; ++i) x[i] += c * last.physical[i];
      for (std::size_t i = 0; i < cps.m(); ++i) y[i] += c * last.internal[i];
      if (region.contains(x) && w.contains(y)) out.push_back({z, std::move(x), std::move(y)});
    }
    // Advance the prefix odometer.
    std::size_t k = n - 1;
    while (k > 0) {
      --k;
      if (z[k] < zhi[k]) {
        ++z[k];
        break;
      }
      z[k] = zlo[k];
      if (k == 0) return out;
    }
    if (n == 1) return out;
  }
}

CutProjectScheme refine_lattice(const CutProjectScheme& cps, Coord n) {
  if (n <= 0) throw InvalidArgument("refinement factor must be positive");
  const QuadScalar f(n);
  std::vector<Generator> gens = cps.generators();
  for (auto& g : gens) {
    for (auto& x : g.physical) x /= f;
    for (auto& x : g.internal) x /= f;
  }
  return CutProjectScheme(cps.d(), cps.m(), cps.radicand(), std::move(gens), cps.declared_density());
}

std::optional<CoordVector> lattice_coordinates(const CutProjectScheme& cps, const QuadVector& physical) {
  const auto q = cps.rational_coordinates(physical);
  if (!q) return std::nullopt;
  CoordVector z;
  for (const auto& c : *q) {
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) return std::nullopt;
    z.push_back(c.get_num().get_si());
  }
  // The Q-span solve leaves free variables at zero; confirm the image exactly.
  if (cps.physical(z) != physical) return std::nullopt;
  return z;
}

QuadVector lift_translate(const CutProjectScheme& cps, const QuadVector& t) {
  const auto z = lattice_coordinates(cps, t);
  if (!z) {
    std::string text;
    for (const auto& x : t) text += (text.empty() ? "" : ",") + x.to_literal();
    throw NotInLattice("(" + text + ") is not the physical part of a lattice point");
  }
  return cps.internal(*z);
}

CutProjectScheme integer_lattice(std::size_t d) {
  std::vector<Generator> gens(d);
  for (std::size_t k = 0; k < d; ++k) {
    gens[k].physical.assign(d, QuadScalar(0));
    gens[k].physical[k] = QuadScalar(1);
  }
  return CutProjectScheme(d, 0, 1, std::move(gens), DensityStatus::vacuous);
}

CutProjectScheme builtin(std::string_view name) {
  if (name == "fibonacci") {
    // Z[phi] with the Galois conjugate phi' = (1 - sqrt 5) / 2 as star map.
    const QuadScalar phi(Rational(1, 2), Rational(1, 2), 5);
    return CutProjectScheme(1, 1, 5, {{{QuadScalar(1)}, {QuadScalar(1)}}, {{phi}, {phi.conjugate()}}},
                            DensityStatus::proved);
  }
  if (name == "silver_mean") {
    const QuadScalar lambda(1, 1, 2);
    return CutProjectScheme(1, 1, 2, {{{QuadScalar(1)}, {QuadScalar(1)}}, {{lambda}, {lambda.conjugate()}}},
                            DensityStatus::proved);
  }
  if (name == "ammann_beenker") {
    // Eighth roots of unity in Z[sqrt 2]^2; the star map conjugates sqrt 2.
    const QuadScalar s(0, Rational(1, 2), 2);
    const std::vector<QuadVector> phys = {{1, 0}, {s, s}, {0, 1}, {-s, s}};
    std::vector<Generator> gens;
    for (const auto& p : phys) gens.push_back({p, {p[0].conjugate(), p[1].conjugate()}});
    return CutProjectScheme(2, 2, 2, std::move(gens), DensityStatus::proved);
  }
  constexpr std::string_view prefix = "integer_lattice(";
  if (name.starts_with(prefix) && name.ends_with(")")) {
    const auto digits = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    std::size_t d = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && d > 0) return integer_lattice(d);
  }
  throw InvalidArgument("unknown built-in scheme '" + std::string(name) + "'");
}

namespace {

std::vector<double> approx(const QuadVector& x) {
  std::vector<double> r;
  r.reserve(x.size());
  for (const auto& c : x) r.push_back(c.to_double());
  return r;
}

double approx_dist_sq(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

struct RealOrder {
  bool operator()(const QuadVector& x, const QuadVector& y) const {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  }
};

}  // namespace

QuadScalar min_squared_gap(std::span<const QuadVector> points) {
  std::set<QuadVector, RealOrder> distinct(points.begin(), points.end());
  if (distinct.size() < 2) throw PreconditionViolated("need at least two distinct points");
  std::vector<QuadVector> pts(distinct.begin(), distinct.end());
  std::vector<std::vector<double>> ap;
  ap.reserve(pts.size());
  for (const auto& p : pts) ap.push_back(approx(p));

  // Sweep along the first axis (points are sorted by it); candidates are confirmed exactly.
  std::optional<QuadScalar> best;
  double best_approx = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double dx = ap[j][0] - ap[i][0];
      if (dx * dx > best_approx * (1 + 1e-9) + 1e-12) break;
      const double da = approx_dist_sq(ap[i], ap[j]);
      if (da > best_approx * (1 + 1e-9) + 1e-12) continue;
      QuadScalar e = squared_norm(pts[j] - pts[i]);
      if (!best || e < *best) {
        best = e;
        best_approx = std::min(best_approx, e.to_double());
      }
    }
  }
  return *best;
}

DeloneCertificate delone_certificate(std::span<const LatticePoint> points, const Region& region,
                                     const Rational& resolution) {
  if (points.size() < 2) throw PreconditionViolated("Delone certificate needs at least two points");
  if (resolution <= 0) throw InvalidArgument("resolution must be positive");
  std::vector<QuadVector> phys;
  for (const auto& p : points) phys.push_back(p.physical);
  DeloneCertificate cert{min_squared_gap(phys), Rational(0), resolution};

  const std::size_t d = region.dim();
  const RationalBox box = region.rational_bounds();
  std::vector<Integer> klo(d), khi(d);
  for (std::size_t i = 0; i < d; ++i) {
    klo[i] = ceil_of(box[i].lo / resolution);
    khi[i] = floor_of(box[i].hi / resolution);
  }
  std::vector<std::vector<double>> ap;
  for (const auto& p : phys) ap.push_back(approx(p));

  // Boundary distance of a sample, used to keep only empty balls lying inside the region.
  auto boundary_distance = [&](const std::vector<double>& s) {
    if (const auto* b = std::get_if<Region::Ball>(&region.shape())) {
      double r = std::sqrt(Rational(b->radius_sq).get_d());
      return r - std::sqrt(approx_dist_sq(s, approx(b->center)));
    }
    const auto& b = std::get<Region::Box>(region.shape());
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s.size(); ++i) {
      m = std::min({m, s[i] - b.lo[i].to_double(), b.hi[i].to_double() - s[i]});
    }
    return m;
  };

  std::optional<QuadScalar> worst;
  for (std::size_t i = 0; i < d; ++i) {
    if (klo[i] > khi[i]) return cert;
  }
  std::vector<Integer> k = klo;
  bool more = true;
  while (more) {
    QuadVector sample(d);
    std::vector<double> sa(d);
    for (std::size_t i = 0; i < d; ++i) {
      sample[i] = QuadScalar(Rational(k[i]) * resolution);
      sa[i] = sample[i].to_double();
    }
    if (region.contains(sample)) {
      double nearest = std::numeric_limits<double>::infinity();
      for (const auto& p : ap) nearest = std::min(nearest, approx_dist_sq(sa, p));
      const double room = boundary_distance(sa);
      if (room >= 0 && room * room + 1e-12 >= nearest) {
        std::optional<QuadScalar> exact;
        for (std::size_t j = 0; j < ap.size(); ++j) {
          if (approx_dist_sq(sa, ap[j]) > nearest * (1 + 1e-9) + 1e-12) continue;
          QuadScalar e = squared_norm(phys[j] - sample);
          if (!exact || e < *exact) exact = e;
        }
        if (!worst || *worst < *exact) worst = exact;
      }
    }
    more = false;
    for (std::size_t i = d; i-- > 0;) {
      if (k[i] < khi[i]) {
        ++k[i];
        more = true;
        break;
      }
      k[i] = klo[i];
    }
  }
  if (worst) cert.max_gap_bound = 2 * sqrt_upper(worst->upper_bound());
  return cert;
}

QuadScalar meyer_certificate(std::span<const LatticePoint> points) {
  if (points.size() < 2) throw PreconditionViolated("Meyer certificate needs at least two points");
  std::set<QuadVector, RealOrder> diffs;
  for (const auto& p : points)
    for (const auto& q : points) diffs.insert(p.physical - q.physical);
  std::vector<QuadVector> v(diffs.begin(), diffs.end());
  return min_squared_gap(v);
}

}  // namespace meyerap
