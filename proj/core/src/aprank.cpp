#include "meyerap/aprank.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <stdexcept>

#include "meyerap/errors.hpp"
#include "meyerap/linalg.hpp"

namespace meyerap {

namespace {

QuadVector combine(const std::vector<Generator>& gens, const RatVector& q, bool internal_part) {
  const std::size_t dim = internal_part ? gens.front().internal.size() : gens.front().physical.size();
  QuadVector x(dim);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (sgn(q[k]) == 0) continue;
    const QuadScalar c(q[k]);
    const QuadVector& g = internal_part ? gens[k].internal : gens[k].physical;
    for (std::size_t i = 0; i < dim; ++i) x[i] += c * g[i];
  }
  return x;
}

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

bool in_ball(const QuadVector& x, const QuadVector& center, const Rational& radius) {
  return squared_norm(x - center) <= QuadScalar(Rational(radius * radius));
}

Window box_window(const BoxWindow& b) { return Window::box(b.lo, b.hi, b.lo_closed, b.hi_closed); }

bool lex_positive(const CoordVector& z) {
  for (Coord c : z) {
    if (c != 0) return c > 0;
  }
  return false;
}

std::size_t leading_index(const CoordVector& z) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i] != 0) return i;
  }
  return z.size();
}

/// Every point of the progression lies in Λ(w) and, when a radius is given, in B_radius(y).
bool lattice_ap_holds(const CutProjectScheme& cps, const Window& w, const ArithmeticProgression& ap,
                      const QuadVector* y, const Rational* radius, std::size_t budget) {
  for (const auto& p : ap_points(ap, budget)) {
    const auto z = to_coords(p);
    if (!z) return false;
    if (!w.contains(cps.internal(*z))) return false;
    if (y != nullptr && !in_ball(cps.physical(*z), *y, *radius)) return false;
  }
  return ap_rank(ap) == cps.rank();
}

ArithmeticProgression scaled_grid(const ArithmeticProgression& ap, const Grid& g) {
  ArithmeticProgression out{ap.point(g.offsets), {}, g.depth, ap.kind};
  for (std::size_t j = 0; j < ap.dimension(); ++j) {
    RatVector r = ap.ratios[j];
    const Rational k(static_cast<unsigned long>(g.steps[j]));
    for (auto& x : r) x *= k;
    out.ratios.push_back(std::move(r));
  }
  return out;
}

RatVector pad(RatVector v, std::size_t size) {
  v.resize(size, Rational(0));
  return v;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

MeyerExpr::MeyerExpr(CutProjectScheme cps, std::vector<Branch> branches)
    : cps_(std::move(cps)), branches_(std::move(branches)) {
  if (branches_.empty()) throw InvalidArgument("a Meyer expression needs at least one branch");
  for (const auto& b : branches_) {
    if (b.window.dim() != cps_.m()) throw DimensionMismatch("branch window dimension differs from the scheme");
    if (const auto* s = std::get_if<SymbolicTranslate>(&b.translate)) {
      if (s->approx.size() != cps_.d()) throw DimensionMismatch("symbolic translate needs one decimal per axis");
      if (std::find(tags_.begin(), tags_.end(), s->tag) != tags_.end()) continue;
      tags_.push_back(s->tag);
      std::vector<double> a;
      for (const auto& text : s->approx) {
        try {
          a.push_back(std::stod(text));
        } catch (const std::exception&) {
          throw InvalidArgument("symbolic translate '" + s->tag + "' has a malformed decimal '" + text + "'");
        }
      }
      tag_approx_.push_back(std::move(a));
    }
  }
  for (const auto& b : branches_) {
    if (const auto* t = std::get_if<QuadVector>(&b.translate)) {
      if (t->size() != cps_.d()) throw DimensionMismatch("translate dimension differs from the scheme");
      auto q = cps_.rational_coordinates(*t);
      if (!q) throw InvalidArgument("translate lies outside the rational span of the physical generators");
      translate_coords_.push_back(pad(std::move(*q), module_dim()));
    } else {
      const auto& tag = std::get<SymbolicTranslate>(b.translate).tag;
      RatVector q(module_dim(), Rational(0));
      q[cps_.rank() + static_cast<std::size_t>(std::find(tags_.begin(), tags_.end(), tag) - tags_.begin())] = 1;
      translate_coords_.push_back(std::move(q));
    }
  }
}

RatVector MeyerExpr::lattice_vector(std::span<const Coord> z) const {
  if (z.size() != cps_.rank()) throw DimensionMismatch("lattice coordinates have the wrong length");
  return pad(to_rational(z), module_dim());
}

RatVector MeyerExpr::module_point(std::size_t j, std::span<const Coord> z) const {
  RatVector p = lattice_vector(z);
  const RatVector& t = translate_coords(j);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += t[i];
  return p;
}

bool MeyerExpr::in_branch(std::size_t j, const RatVector& p) const {
  if (p.size() != module_dim()) throw DimensionMismatch("module point has the wrong length");
  const RatVector& t = translate_coords(j);
  CoordVector z(cps_.rank());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Rational c = p[i] - t[i];
    if (i >= cps_.rank()) {
      if (sgn(c) != 0) return false;
      continue;
    }
    if (c.get_den() != 1 || !c.get_num().fits_slong_p()) return false;
    z[i] = c.get_num().get_si();
  }
  return branches_[j].window.contains(cps_.internal(z));
}

std::optional<std::size_t> MeyerExpr::branch_of(const RatVector& p) const {
  for (std::size_t j = 0; j < branches_.size(); ++j) {
    if (in_branch(j, p)) return j;
  }
  return std::nullopt;
}

std::optional<QuadVector> MeyerExpr::physical(const RatVector& p) const {
  if (p.size() != module_dim()) throw DimensionMismatch("module point has the wrong length");
  for (std::size_t i = cps_.rank(); i < p.size(); ++i) {
    if (sgn(p[i]) != 0) return std::nullopt;
  }
  return combine(cps_.generators(), p, false);
}

std::vector<double> MeyerExpr::approx_physical(const RatVector& p) const {
  if (p.size() != module_dim()) throw DimensionMismatch("module point has the wrong length");
  std::vector<double> x(cps_.d(), 0.0);
  for (std::size_t k = 0; k < cps_.rank(); ++k) {
    const double c = p[k].get_d();
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * cps_.generators()[k].physical[i].to_double();
  }
  for (std::size_t t = 0; t < tags_.size(); ++t) {
    const double c = p[cps_.rank() + t].get_d();
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * tag_approx_[t][i];
  }
  return x;
}

ShrunkWindows shrink_window(const Window& w, const Integer& multiple) {
  if (multiple < 1) throw InvalidArgument("shrink multiple must be at least 1");
  const auto* b = w.as_box();
  if (b == nullptr) throw InvalidArgument("shrink_window needs a box window; inscribe a box first");
  QuadVector ulo, uhi, vlo, vhi;
  const QuadScalar four(4);
  const QuadScalar four_m(Rational(4 * multiple));
  for (std::size_t i = 0; i < w.dim(); ++i) {
    const QuadScalar width = b->hi[i] - b->lo[i];
    ulo.push_back(b->lo[i] + width / four);
    uhi.push_back(b->hi[i] - width / four);
    vhi.push_back(width / four_m);
    vlo.push_back(-vhi.back());
  }
  return {Window::open_box(std::move(ulo), std::move(uhi)), Window::open_box(std::move(vlo), std::move(vhi))};
}

bool minkowski_contained(const ShrunkWindows& uv, const Integer& multiple, const Window& w) {
  const auto* u = uv.inner.as_box();
  const auto* v = uv.step.as_box();
  const auto* b = w.as_box();
  if (u == nullptr || v == nullptr || b == nullptr) throw InvalidArgument("Minkowski check needs box windows");
  if (u->lo.size() != b->lo.size() || v->lo.size() != b->lo.size()) {
    throw DimensionMismatch("Minkowski check in mismatched dimensions");
  }
  const QuadScalar m{Rational(multiple)};
  for (std::size_t i = 0; i < b->lo.size(); ++i) {
    // Sum endpoints are attained only when both summands attain theirs.
    const QuadScalar lo = u->lo[i] + m * v->lo[i];
    const QuadScalar hi = u->hi[i] + m * v->hi[i];
    const bool lo_attained = u->lo_closed[i] && v->lo_closed[i];
    const bool hi_attained = u->hi_closed[i] && v->hi_closed[i];
    if (lo < b->lo[i] || (lo == b->lo[i] && lo_attained && !b->lo_closed[i])) return false;
    if (b->hi[i] < hi || (hi == b->hi[i] && hi_attained && !b->hi_closed[i])) return false;
  }
  return true;
}

Rational covering_radius_certificate(const CutProjectScheme& cps, const Window& u, const ConstructionOptions& opts) {
  if (u.dim() != cps.m()) throw DimensionMismatch("window dimension differs from internal dimension");
  if (opts.resolution <= 0 || opts.sample_half_width <= 0) {
    throw InvalidArgument("covering sample needs a positive resolution and half-width");
  }
  const std::size_t d = cps.d();
  const Integer steps = floor_of(opts.sample_half_width / opts.resolution);
  if (!steps.fits_slong_p()) throw BudgetExceeded("covering sample grid is too fine");
  const long s = steps.get_si();

  std::vector<std::vector<double>> samples_approx;
  std::vector<QuadVector> samples;
  std::vector<long> k(d, -s);
  for (bool more = true; more;) {
    if (samples.size() >= opts.budget) throw BudgetExceeded("covering sample exceeds the point budget");
    QuadVector x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = QuadScalar(Rational(k[i]) * opts.resolution);
    samples_approx.push_back(approx(x));
    samples.push_back(std::move(x));
    more = false;
    for (std::size_t i = d; i-- > 0;) {
      if (k[i] < s) {
        ++k[i];
        more = true;
        break;
      }
      k[i] = -s;
    }
  }

  const Rational half = Rational(s) * opts.resolution;
  for (Rational extra = 1;; extra *= 2) {
    const Rational reach = half + extra;
    const auto points =
        enumerate_model_set(cps, u, Region::box(QuadVector(d, QuadScalar(-reach)), QuadVector(d, QuadScalar(reach))),
                            opts.budget);
    if (points.empty()) continue;
    std::vector<std::vector<double>> pa;
    for (const auto& p : points) pa.push_back(approx(p.physical));

    std::vector<double> nearest(samples.size(), std::numeric_limits<double>::infinity());
    double worst = 0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      for (const auto& p : pa) nearest[i] = std::min(nearest[i], approx_dist_sq(samples_approx[i], p));
      worst = std::max(worst, nearest[i]);
    }
    // Confirm the largest nearest distance exactly; doubles only pick candidates.
    std::optional<QuadScalar> exact_worst;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (nearest[i] < worst * (1 - 1e-9) - 1e-12) continue;
      std::optional<QuadScalar> best;
      for (std::size_t j = 0; j < points.size(); ++j) {
        if (approx_dist_sq(samples_approx[i], pa[j]) > nearest[i] * (1 + 1e-9) + 1e-12) continue;
        QuadScalar e = squared_norm(points[j].physical - samples[i]);
        if (!best || e < *best) best = e;
      }
      if (!exact_worst || *exact_worst < *best) exact_worst = best;
    }
    // Nearest points farther than `extra` could lie outside the enumerated box.
    if (*exact_worst <= QuadScalar(Rational(extra * extra))) {
      return sqrt_upper(exact_worst->upper_bound()) + opts.resolution;
    }
  }
}

std::vector<LatticePoint> independent_ratios(const CutProjectScheme& cps, const Window& v,
                                             const ConstructionOptions& opts) {
  if (v.dim() != cps.m()) throw DimensionMismatch("window dimension differs from internal dimension");
  for (Rational rho = 1;; rho *= 2) {
    auto points = enumerate_model_set(cps, v, Region::centered(cps.d(), rho), opts.budget);
    // v is symmetric, so one representative of each pair ±x suffices.
    std::erase_if(points, [](const LatticePoint& p) { return !lex_positive(p.coords); });
    std::vector<QuadScalar> norms;
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      norms.push_back(squared_norm(points[i].physical));
      order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (norms[a] != norms[b]) return norms[a] < norms[b];
      const auto la = leading_index(points[a].coords);
      const auto lb = leading_index(points[b].coords);
      if (la != lb) return la < lb;
      return points[a].coords < points[b].coords;
    });
    std::vector<RatVector> coords;
    for (std::size_t i : order) coords.push_back(to_rational(points[i].coords));
    const auto chosen = max_li_subset(coords);
    if (chosen.size() == cps.rank()) {
      std::vector<LatticePoint> out;
      for (std::size_t c : chosen) out.push_back(points[order[c]]);
      return out;
    }
  }
}

ModelSetProgression li_ap_in_model_set(const CutProjectScheme& cps, const Window& w, std::size_t length,
                                       const QuadVector& y, const ConstructionOptions& opts) {
  if (y.size() != cps.d()) throw DimensionMismatch("center has the wrong dimension");
  if (w.dim() != cps.m()) throw DimensionMismatch("window dimension differs from internal dimension");
  const Integer multiple = std::max<Integer>(1, Integer(static_cast<unsigned long>(length)) *
                                                    static_cast<unsigned long>(cps.rank()));
  const Window box = box_window(w.inscribed_box());
  const ShrunkWindows uv = shrink_window(box, multiple);
  if (!minkowski_contained(uv, multiple, box)) throw std::logic_error("shrunk windows escape the window");

  const auto ratios = independent_ratios(cps, uv.step, opts);
  Rational step_sum = 0;
  for (const auto& r : ratios) step_sum += sqrt_upper(squared_norm(r.physical).upper_bound());
  step_sum *= static_cast<unsigned long>(length);

  Rational covering = covering_radius_certificate(cps, uv.inner, opts);
  for (std::size_t attempt = 0; attempt <= opts.max_retries; ++attempt, covering *= 2) {
    const auto candidates = enumerate_model_set(cps, uv.inner, Region::ball(y, covering * covering), opts.budget);
    if (candidates.empty()) continue;
    // Nearest to y; candidates arrive sorted by coordinates, so ties keep the smallest.
    const LatticePoint* base = &candidates.front();
    QuadScalar best = squared_norm(base->physical - y);
    for (const auto& c : candidates) {
      QuadScalar e = squared_norm(c.physical - y);
      if (e < best) {
        best = std::move(e);
        base = &c;
      }
    }
    ModelSetProgression out{{to_rational(base->coords), {}, length, CoordinateKind::lattice},
                            *base,
                            ratios,
                            step_sum + covering,
                            covering};
    for (const auto& r : ratios) out.ap.ratios.push_back(to_rational(r.coords));
    if (lattice_ap_holds(cps, w, out.ap, &y, &out.radius, opts.budget)) return out;
  }
  throw BudgetExceeded("li-progression construction failed after " + std::to_string(opts.max_retries) + " retries");
}

MonoProgression mono_li_ap(const CutProjectScheme& cps, const Window& w, std::size_t k, const PointColoring& coloring,
                           const QuadVector& y, const ConstructionOptions& opts) {
  for (std::size_t n = std::max<std::size_t>(k, 1); n <= opts.max_length; n *= 2) {
    const auto host = li_ap_in_model_set(cps, w, n, y, opts);
    std::vector<std::uint32_t> colors;
    std::uint32_t num_colors = 0;
    for (const auto& p : ap_points(host.ap, opts.budget)) {
      const auto c = coloring(star(cps, *to_coords(p)));
      if (!c) throw PreconditionViolated("coloring is undefined on a progression point");
      colors.push_back(*c);
      num_colors = std::max(num_colors, *c + 1);
    }
    const CubeColoring cube(n, cps.rank(), num_colors, std::move(colors));
    const auto grid = find_mono_grid(cube, k);
    if (!grid) continue;

    MonoProgression out{scaled_grid(host.ap, *grid), cube.color(grid->offsets), *grid, n};
    for (const auto& p : ap_points(out.ap, opts.budget)) {
      if (coloring(star(cps, *to_coords(p))) != out.color) throw std::logic_error("rebased progression is not monochromatic");
    }
    if (!lattice_ap_holds(cps, w, out.ap, nullptr, nullptr, opts.budget)) {
      throw std::logic_error("rebased progression left the model set");
    }
    return out;
  }
  throw BudgetExceeded("no monochromatic progression up to host length " + std::to_string(opts.max_length));
}

MeyerProgression li_ap_in_meyer(const MeyerExpr& expr, std::size_t length, const QuadVector& y,
                                const ConstructionOptions& opts) {
  const CutProjectScheme& cps = expr.cps();
  if (y.size() != cps.d()) throw DimensionMismatch("center has the wrong dimension");
  const Branch& first = expr.branches().front();
  MeyerProgression out{{}, 0, std::nullopt};
  ModelSetProgression host;
  if (const auto* t = std::get_if<QuadVector>(&first.translate)) {
    host = li_ap_in_model_set(cps, first.window, length, y - *t, opts);
    out.radius = host.radius;
  } else {
    host = li_ap_in_model_set(cps, first.window, length, y, opts);
  }
  const RatVector& shift = expr.translate_coords(0);
  out.ap = {pad(host.ap.base, expr.module_dim()), {}, length, CoordinateKind::module};
  for (std::size_t i = 0; i < shift.size(); ++i) out.ap.base[i] += shift[i];
  for (const auto& r : host.ap.ratios) out.ap.ratios.push_back(pad(r, expr.module_dim()));

  const Membership member = [&](const RatVector& p) { return expr.in_branch(0, p); };
  if (!verify_ap(out.ap, member, nullptr, opts.budget) || ap_rank(out.ap) != cps.rank()) {
    throw std::logic_error("translated progression left its branch");
  }
  return out;
}

std::string_view to_string(UpperBoundTag t) {
  switch (t) {
    case UpperBoundTag::theorem_d_plus_m: return "theorem-d-plus-m";
    case UpperBoundTag::module_rank: return "module-rank";
  }
  return "theorem-d-plus-m";
}

ApRankBracket aprank_bounds(const MeyerExpr& expr, std::size_t max_length, const ConstructionOptions& opts) {
  const std::size_t rank = expr.cps().rank();
  ApRankBracket out;
  out.upper = rank;
  out.upper_tag = UpperBoundTag::theorem_d_plus_m;
  const QuadVector origin(expr.cps().d());
  const Membership member = [&](const RatVector& p) { return expr.contains(p); };
  for (std::size_t n = 1; n <= max_length; ++n) {
    try {
      auto cert = li_ap_in_meyer(expr, n, origin, opts).ap;
      if (!verify_ap(cert, member, nullptr, opts.budget)) throw std::logic_error("certificate failed verification");
      out.certificates.push_back(std::move(cert));
      out.tested_lengths.push_back(n);
    } catch (const BudgetExceeded&) {
      break;
    }
  }
  // Without certificates only the general bound aprank >= 1 remains.
  out.lower = out.certificates.empty() ? 1 : rank;
  return out;
}

ApRankBracket aprank_bounds_sample(std::span<const RatVector> points, std::size_t max_length, std::size_t budget) {
  ApRankBracket out;
  out.upper = rank_over_q(points);
  out.upper_tag = UpperBoundTag::module_rank;
  for (std::size_t n = 1; n <= max_length; ++n) out.tested_lengths.push_back(n);
  // Rank n at every length implies rank n - 1 (drop a ratio), so stop at the first failure.
  for (std::size_t n = 1; n <= out.upper; ++n) {
    std::vector<ArithmeticProgression> certs;
    try {
      for (std::size_t len : out.tested_lengths) {
        auto ap = brute_force_li_ap(points, n, len, budget);
        if (!ap) break;
        certs.push_back(std::move(*ap));
      }
    } catch (const BudgetExceeded&) {
    }
    if (certs.size() != out.tested_lengths.size()) break;
    out.lower = n;
    out.certificates = std::move(certs);
  }
  return out;
}

std::vector<RatVector> sample_expr(const MeyerExpr& expr, const Region& region, std::size_t budget) {
  std::set<RatVector> out;
  for (std::size_t j = 0; j < expr.branches().size(); ++j) {
    const Branch& b = expr.branches()[j];
    const auto* t = std::get_if<QuadVector>(&b.translate);
    const Region shifted = t != nullptr ? region.translated(QuadVector(t->size()) - *t) : region;
    for (const auto& p : enumerate_model_set(expr.cps(), b.window, shifted, budget)) {
      out.insert(expr.module_point(j, p.coords));
      if (out.size() > budget) throw BudgetExceeded("expression sample exceeds the point budget");
    }
  }
  return {out.begin(), out.end()};
}

std::size_t sampled_module_rank(const MeyerExpr& expr, const Region& region, std::size_t budget) {
  return rank_over_q(sample_expr(expr, region, budget));
}

MeyerExpr rank_gap_example(const CutProjectScheme& cps, std::size_t n) {
  const Window w = cps.m() == 0 ? Window::trivial()
                                : Window::closed_box(QuadVector(cps.m(), QuadScalar(0)),
                                                     QuadVector(cps.m(), QuadScalar(1)));
  return rank_gap_example(cps, n, w);
}

MeyerExpr rank_gap_example(const CutProjectScheme& cps, std::size_t n, const Window& w) {
  std::vector<Branch> branches{{QuadVector(cps.d()), w}};
  // Cube roots of non-cubes lie outside every quadratic field; they only serve as display values.
  long radicand = 2;
  for (std::size_t i = 1; i <= n; ++i) {
    SymbolicTranslate t{"s" + std::to_string(i), {}};
    for (std::size_t a = 0; a < cps.d(); ++a) t.approx.push_back(format_double(std::cbrt(double(radicand++))));
    branches.push_back({std::move(t), w});
  }
  return MeyerExpr(cps, std::move(branches));
}

std::variant<Euclideanization, RankGap> euclideanize(const MeyerExpr& expr, const EuclideanizeOptions& opts) {
  for (std::size_t j = 0; j < expr.branches().size(); ++j) {
    if (const auto* s = std::get_if<SymbolicTranslate>(&expr.branches()[j].translate)) return RankGap{j, s->tag};
  }
  const CutProjectScheme& cps = expr.cps();
  Integer multiplier = 1;
  for (std::size_t j = 0; j < expr.branches().size(); ++j) {
    for (const auto& q : expr.translate_coords(j)) mpz_lcm(multiplier.get_mpz_t(), multiplier.get_mpz_t(), q.get_den_mpz_t());
  }
  if (!multiplier.fits_slong_p()) throw BudgetExceeded("refinement multiplier exceeds 64 bits");

  Euclideanization out{refine_lattice(cps, multiplier.get_si()), Window::trivial(), multiplier, {}, {}};
  std::vector<std::pair<QuadVector, Window>> parts;
  for (const auto& b : expr.branches()) {
    out.lifts.push_back(lift_translate(out.cps, std::get<QuadVector>(b.translate)));
    parts.emplace_back(out.lifts.back(), b.window);
  }
  out.window = parts.size() == 1 ? translate(parts.front().second, parts.front().first)
                                 : Window::shifted_union(std::move(parts)).simplified();

  // Each expression point z + q_j has refined coordinates multiplier * (z + q_j).
  const auto sample = sample_expr(expr, Region::centered(cps.d(), opts.sample_radius), opts.budget);
  const Rational m(multiplier);
  for (const auto& p : sample) {
    RatVector scaled;
    for (const auto& c : p) scaled.push_back(c * m);
    const auto z = to_coords(scaled);
    if (!z || !out.window.contains(out.cps.internal(*z))) {
      throw std::logic_error("euclideanized model set misses an expression point");
    }
  }
  out.report = {opts.sample_radius, sample.size(), true};
  return out;
}

ReverseContainment check_reverse_containment(const MeyerExpr& expr, const Euclideanization& e, const Rational& radius,
                                             std::size_t budget) {
  ReverseContainment out;
  const Rational m(e.multiplier);
  for (const auto& p : enumerate_model_set(e.cps, e.window, Region::centered(e.cps.d(), radius), budget)) {
    ++out.point_count;
    RatVector q;
    for (Coord c : p.coords) q.push_back(Rational(c) / m);
    if (expr.contains(pad(std::move(q), expr.module_dim()))) continue;
    if (out.outside++ == 0) out.first_outside = p;
  }
  return out;
}

}  // namespace meyerap
