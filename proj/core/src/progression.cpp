#include "meyerap/progression.hpp"

#include <algorithm>
#include <set>

#include "meyerap/errors.hpp"
#include "meyerap/linalg.hpp"

namespace meyerap {

RatVector to_rational(std::span<const Coord> z) {
  RatVector r;
  r.reserve(z.size());
  for (Coord c : z) r.emplace_back(c);
  return r;
}

std::optional<CoordVector> to_coords(const RatVector& v) {
  CoordVector z;
  z.reserve(v.size());
  for (const auto& q : v) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) return std::nullopt;
    z.push_back(q.get_num().get_si());
  }
  return z;
}

RatVector ArithmeticProgression::point(std::span<const std::size_t> coefficients) const {
  if (coefficients.size() != ratios.size()) throw DimensionMismatch("coefficient tuple has the wrong length");
  RatVector p = base;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    if (coefficients[i] == 0) continue;
    const Rational c(static_cast<unsigned long>(coefficients[i]));
    for (std::size_t j = 0; j < p.size(); ++j) p[j] += c * ratios[i][j];
  }
  return p;
}

std::size_t point_count(const ArithmeticProgression& ap, std::size_t budget) {
  std::size_t count = 1;
  const std::size_t per_axis = ap.length + 1;
  for (std::size_t i = 0; i < ap.dimension(); ++i) {
    if (count > budget / per_axis) {
      throw BudgetExceeded("progression has more than " + std::to_string(budget) + " points");
    }
    count *= per_axis;
  }
  return count;
}

namespace {

bool next_tuple(std::vector<std::size_t>& c, std::size_t max) {
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] < max) {
      ++c[i];
      return true;
    }
    c[i] = 0;
  }
  return false;
}

}  // namespace

std::vector<RatVector> ap_points(const ArithmeticProgression& ap, std::size_t budget) {
  for (const auto& r : ap.ratios) {
    if (r.size() != ap.base.size()) throw DimensionMismatch("ratio and base dimensions differ");
  }
  std::vector<RatVector> out;
  out.reserve(point_count(ap, budget));
  std::vector<std::size_t> c(ap.dimension(), 0);
  do {
    out.push_back(ap.point(c));
  } while (next_tuple(c, ap.length));
  return out;
}

bool is_proper(const ArithmeticProgression& ap, std::size_t budget) {
  auto pts = ap_points(ap, budget);
  std::sort(pts.begin(), pts.end());
  return std::adjacent_find(pts.begin(), pts.end()) == pts.end();
}

std::size_t ap_rank(const ArithmeticProgression& ap) { return rank_over_q(ap.ratios); }

namespace {

bool is_prime(const Integer& p) { return mpz_probab_prime_p(p.get_mpz_t(), 30) > 0; }

}  // namespace

CrtCoefficients crt_coefficients(std::size_t n, std::size_t length) {
  if (n == 0) throw InvalidArgument("CRT construction needs n >= 1");
  CrtCoefficients out{n, length, {}, {}};
  Integer candidate = static_cast<unsigned long>(length) + 1;
  while (out.primes.size() < n) {
    if (candidate >= 2 && is_prime(candidate)) out.primes.push_back(candidate);
    ++candidate;
  }
  Integer product = 1;
  for (const auto& p : out.primes) product *= p;
  for (const auto& p : out.primes) {
    const Integer cofactor = product / p;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), Integer(cofactor % p).get_mpz_t(), p.get_mpz_t());
    Integer m = cofactor * inv;
    mpz_mod(m.get_mpz_t(), m.get_mpz_t(), product.get_mpz_t());
    out.values.push_back(m);
  }
  return out;
}

ArithmeticProgression embed_rank1(const LineProgression& line, std::size_t n, std::size_t length) {
  if (line.start.size() != line.ratio.size()) throw DimensionMismatch("line start and ratio dimensions differ");
  const auto crt = crt_coefficients(n, length);
  Integer needed = 0;
  for (const auto& m : crt.values) needed += m;
  needed *= static_cast<unsigned long>(length);
  if (Integer(static_cast<unsigned long>(line.length)) < needed) {
    throw PreconditionViolated("line length " + std::to_string(line.length) + " is below the required " +
                               needed.get_str());
  }
  ArithmeticProgression ap{line.start, {}, length, CoordinateKind::lattice};
  for (const auto& m : crt.values) {
    RatVector r = line.ratio;
    for (auto& x : r) x *= Rational(m);
    ap.ratios.push_back(std::move(r));
  }
  return ap;
}

namespace {

RatVector add_scaled(const RatVector& a, const RatVector& b, std::size_t c) {
  RatVector r = a;
  const Rational k(static_cast<unsigned long>(c));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += k * b[i];
  return r;
}

RatVector subtract(const RatVector& a, const RatVector& b) {
  RatVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

class LiSearch {
 public:
  LiSearch(const std::set<RatVector>& members, std::size_t n, std::size_t length, std::size_t budget)
      : members_(members), n_(n), length_(length), budget_(budget) {}

  std::optional<ArithmeticProgression> from_base(const RatVector& base, const std::vector<RatVector>& all) {
    candidates_.clear();
    for (const auto& p : all) {
      if (p == base) continue;
      RatVector r = subtract(p, base);
      bool whole_line = true;
      for (std::size_t c = 2; c <= length_ && whole_line; ++c) whole_line = members_.count(add_scaled(base, r, c)) > 0;
      if (whole_line) candidates_.push_back(std::move(r));
    }
    base_ = base;
    chosen_.clear();
    // Points reachable with the ratios chosen so far.
    std::vector<RatVector> reach{base};
    if (descend(0, reach)) return ArithmeticProgression{base, chosen_, length_, CoordinateKind::lattice};
    return std::nullopt;
  }

 private:
  bool descend(std::size_t first, const std::vector<RatVector>& reach) {
    if (chosen_.size() == n_) return true;
    for (std::size_t i = first; i < candidates_.size(); ++i) {
      if (++visited_ > budget_) throw BudgetExceeded("li-progression search exceeded its budget");
      chosen_.push_back(candidates_[i]);
      if (rank_over_q(chosen_) == chosen_.size()) {
        std::vector<RatVector> next;
        bool ok = true;
        for (const auto& p : reach) {
          for (std::size_t c = 0; c <= length_ && ok; ++c) {
            RatVector q = add_scaled(p, candidates_[i], c);
            if (c > 0 && members_.count(q) == 0) ok = false;
            next.push_back(std::move(q));
          }
          if (!ok) break;
        }
        if (ok && descend(i + 1, next)) return true;
      }
      chosen_.pop_back();
    }
    return false;
  }

  const std::set<RatVector>& members_;
  std::size_t n_;
  std::size_t length_;
  std::size_t budget_;
  std::size_t visited_ = 0;
  RatVector base_;
  std::vector<RatVector> candidates_;
  std::vector<RatVector> chosen_;
};

}  // namespace

std::optional<ArithmeticProgression> brute_force_li_ap(std::span<const RatVector> points, std::size_t n,
                                                       std::size_t length, std::size_t budget) {
  if (n == 0) throw InvalidArgument("progression dimension must be at least 1");
  if (points.size() > budget) throw BudgetExceeded("point set exceeds the search budget");
  const std::set<RatVector> members(points.begin(), points.end());
  if (members.empty()) return std::nullopt;
  const std::vector<RatVector> sorted(members.begin(), members.end());
  const std::size_t dim = sorted.front().size();
  for (const auto& p : sorted) {
    if (p.size() != dim) throw DimensionMismatch("points of different dimensions");
  }

  if (length == 0) {
    // A single point; any n independent directions serve as ratios.
    if (n > dim) return std::nullopt;
    ArithmeticProgression ap{sorted.front(), {}, 0, CoordinateKind::lattice};
    for (std::size_t i = 0; i < n; ++i) {
      RatVector e(dim, Rational(0));
      e[i] = 1;
      ap.ratios.push_back(std::move(e));
    }
    return ap;
  }

  LiSearch search(members, n, length, budget);
  for (const auto& base : sorted) {
    if (auto ap = search.from_base(base, sorted)) return ap;
  }
  return std::nullopt;
}

bool verify_ap(const ArithmeticProgression& ap, const Membership& member, const Membership& in_region,
               std::size_t budget) {
  for (const auto& p : ap_points(ap, budget)) {
    if (!member(p)) return false;
    if (in_region && !in_region(p)) return false;
  }
  return true;
}

}  // namespace meyerap
