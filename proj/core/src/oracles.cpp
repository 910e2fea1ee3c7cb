#include "schlicht/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace schlicht {

namespace {

constexpr double kNonvanishingFloor = 1e-6;
constexpr double kCollisionTol = 1e-6;

void require_normalized(const TaylorSeries& f, const char* op) {
  if (!f.is_normalized())
    throw DegenerateSeriesError(std::string(op) + ": normalized series required");
}

double grid_tail(const TaylorSeries& s, const DiskGrid& grid) {
  return linear_growth_tail(linear_slope_estimate(s), s.order(), grid.max_radius());
}

}  // namespace

DiskGrid::DiskGrid(std::vector<double> radii, int angles_per_radius)
    : radii_(std::move(radii)), angles_(angles_per_radius) {
  if (radii_.empty()) throw InvalidGridError("grid needs at least one radius");
  if (angles_ < 8) throw InvalidGridError("grid needs at least 8 angles per radius");
  double prev = 0.0;
  for (double r : radii_) {
    if (!std::isfinite(r) || r <= prev)
      throw InvalidGridError("grid radii must be positive and strictly ascending");
    if (r > kRhoMax) throw InvalidGridError("grid radii must not exceed rho_max");
    prev = r;
  }
}

DiskGrid DiskGrid::geometric(int num_radii, int angles_per_radius,
                             double r_min, double r_max) {
  if (num_radii < 1 || !(r_min > 0.0) || r_max < r_min)
    throw InvalidGridError("geometric grid needs 0 < r_min <= r_max and at least one radius");
  std::vector<double> radii(static_cast<std::size_t>(num_radii));
  if (num_radii == 1) {
    radii[0] = r_max;
  } else {
    const double ratio = r_max / r_min;
    for (int i = 0; i < num_radii; ++i)
      radii[static_cast<std::size_t>(i)] =
          r_min * std::pow(ratio, static_cast<double>(i) / static_cast<double>(num_radii - 1));
    radii.front() = r_min;
    radii.back() = r_max;
  }
  return DiskGrid(std::move(radii), angles_per_radius);
}

std::vector<DiskPoint> DiskGrid::points() const {
  std::vector<DiskPoint> pts;
  pts.reserve(radii_.size() * static_cast<std::size_t>(angles_));
  for (double r : radii_)
    for (int j = 0; j < angles_; ++j)
      pts.emplace_back(std::polar(r, kTwoPi * static_cast<double>(j) / static_cast<double>(angles_)));
  return pts;
}

DiskGrid default_grid() { return DiskGrid::geometric(32, 256); }

TaylorSeries u_defect_series(const TaylorSeries& f) {
  require_normalized(f, "u_defect");
  // f'(z)(z/f)^2 - 1 = (w - z w') - 1 for w = z/f.
  const TaylorSeries w = reciprocal(divide_by_z(f));
  std::vector<Cx> d(w.coeffs().size());
  d[0] = w.coeffs()[0] - Cx(1.0, 0.0);
  for (std::size_t n = 1; n < d.size(); ++n)
    d[n] = (1.0 - static_cast<double>(n)) * w.coeffs()[n];
  return TaylorSeries(std::move(d));
}

Cx u_defect(const TaylorSeries& f, const DiskPoint& z) {
  return evaluate(u_defect_series(f), z);
}

MembershipVerdict membership_u(const TaylorSeries& f, double lambda, const DiskGrid& grid) {
  if (!(lambda > 0.0) || lambda > 1.0) throw Error("lambda must lie in (0, 1]");
  const TaylorSeries defect = u_defect_series(f);
  double worst = -1.0;
  DiskPoint witness;
  for (const DiskPoint& z : grid.points()) {
    const double v = std::abs(evaluate(defect, z));
    if (v > worst) {
      worst = v;
      witness = z;
    }
  }
  const double margin = lambda - worst;
  return {margin < 0.0 ? Verdict::violated : Verdict::holds_on_grid,
          margin, witness, grid_tail(defect, grid), grid, false};
}

TaylorSeries halfplane_field_series(const TaylorSeries& f, HalfplaneKind kind) {
  require_normalized(f, "halfplane field");
  const int order = f.order();
  if (kind == HalfplaneKind::starlike) {
    // z f'/f = f'/(f/z): both operands carry true coefficients through order N-1.
    return divide(truncated(derivative(f), order - 1), divide_by_z(f));
  }
  if (order < 3) throw Error("convex_shift field needs order >= 3");
  // 1 + z f''/f': the quotient is exact through order N-2, then shifted up one slot.
  const TaylorSeries fp = derivative(f);
  const TaylorSeries q = divide(truncated(derivative(fp), order - 2), truncated(fp, order - 2));
  std::vector<Cx> field(q.coeffs().size() + 1, Cx(0.0, 0.0));
  field[0] = Cx(1.0, 0.0);
  for (std::size_t k = 0; k < q.coeffs().size(); ++k) field[k + 1] = q.coeffs()[k];
  return TaylorSeries(std::move(field));
}

Cx halfplane_field(const TaylorSeries& f, HalfplaneKind kind, const DiskPoint& z) {
  if (kind == HalfplaneKind::convex_shift) {
    if (std::abs(evaluate(derivative(f), z)) <= kInvertTol)
      throw DegenerateSeriesError("halfplane field: f' vanishes at the evaluation point");
  } else {
    if (std::abs(evaluate(divide_by_z(f), z)) <= kInvertTol)
      throw DegenerateSeriesError("halfplane field: f/z vanishes at the evaluation point");
  }
  return evaluate(halfplane_field_series(f, kind), z);
}

MembershipVerdict membership_halfplane(const TaylorSeries& f, HalfplaneKind kind,
                                       double threshold, const DiskGrid& grid) {
  const TaylorSeries field = halfplane_field_series(f, kind);
  double worst = std::numeric_limits<double>::infinity();
  DiskPoint witness;
  for (const DiskPoint& z : grid.points()) {
    const double v = evaluate(field, z).real();
    if (v < worst) {
      worst = v;
      witness = z;
    }
  }
  const double margin = worst - threshold;
  return {margin < 0.0 ? Verdict::violated : Verdict::holds_on_grid,
          margin, witness, grid_tail(field, grid), grid, false};
}

MembershipVerdict membership_ctc(const TaylorSeries& f, const TaylorSeries& g,
                                 double alpha, const DiskGrid& grid) {
  if (!(std::abs(alpha) < 1.5707963267948966))
    throw Error("alpha must lie in (-pi/2, pi/2)");
  require_normalized(f, "membership_ctc");
  require_normalized(g, "membership_ctc");
  const bool g_starlike =
      membership_halfplane(g, HalfplaneKind::starlike, 0.0, grid).verdict == Verdict::holds_on_grid;
  const int common = std::min(f.order(), g.order());
  const TaylorSeries q = divide(truncated(derivative(f), common - 1),
                                truncated(divide_by_z(g), common - 1));
  const Cx rot = std::polar(1.0, alpha);
  double worst = std::numeric_limits<double>::infinity();
  DiskPoint witness;
  for (const DiskPoint& z : grid.points()) {
    const double v = (rot * evaluate(q, z)).real();
    if (v < worst) {
      worst = v;
      witness = z;
    }
  }
  return {worst < 0.0 ? Verdict::violated : Verdict::holds_on_grid,
          worst, witness, grid_tail(q, grid), grid, !g_starlike};
}

bool alexander_check(const TaylorSeries& f, const DiskGrid& grid) {
  const MembershipVerdict convex =
      membership_halfplane(f, HalfplaneKind::convex_shift, 0.0, grid);
  const MembershipVerdict star =
      membership_halfplane(multiply_by_z(derivative(f)), HalfplaneKind::starlike, 0.0, grid);
  return convex.verdict == star.verdict;
}

namespace {

// Grid minimum of |w|, then a damped Newton hunt for an interior zero of w.
// The refined point replaces the grid minimum only on a decisive improvement.
MembershipVerdict min_modulus_verdict(const TaylorSeries& w, const DiskGrid& grid) {
  double best = std::numeric_limits<double>::infinity();
  DiskPoint witness;
  for (const DiskPoint& z : grid.points()) {
    const double v = std::abs(evaluate(w, z));
    if (v < best) {
      best = v;
      witness = z;
    }
  }
  const double max_r = grid.max_radius();
  const TaylorSeries wp = derivative(w);
  Cx zz = witness.value();
  for (int it = 0; it < 48; ++it) {
    const Cx wv = evaluate(w, DiskPoint(zz));
    if (std::abs(wv) < 1e-15) break;
    const Cx dv = evaluate(wp, DiskPoint(zz));
    if (std::abs(dv) < 1e-14) break;
    const Cx full = -wv / dv;
    double damp = 1.0;
    while (std::abs(zz + damp * full) > max_r && damp > 1e-4) damp *= 0.5;
    const Cx next = zz + damp * full;
    if (std::abs(next) > max_r) break;
    if (std::abs(next - zz) < 1e-16) break;
    zz = next;
  }
  const double refined = std::abs(evaluate(w, DiskPoint(zz)));
  if (refined < 0.5 * best) {
    best = refined;
    witness = DiskPoint(zz);
  }
  const double margin = best - kNonvanishingFloor;
  return {margin < 0.0 ? Verdict::violated : Verdict::holds_on_grid,
          margin, witness, grid_tail(w, grid), grid, false};
}

}  // namespace

MembershipVerdict nonvanishing_check(const TaylorSeries& f, const DiskGrid& grid) {
  require_normalized(f, "nonvanishing_check");
  return min_modulus_verdict(divide_by_z(f), grid);
}

MembershipVerdict derivative_nonvanishing_check(const TaylorSeries& f, const DiskGrid& grid) {
  require_normalized(f, "derivative_nonvanishing_check");
  return min_modulus_verdict(derivative(f), grid);
}

namespace {

// Joint Gauss-Newton on r(z1, z2) = f(z1) - f(z2) from a candidate pair; steps
// that leave the disk or collapse the pair below half the separation floor are damped.
std::optional<CollisionWitness> refine_pair(const TaylorSeries& f, const TaylorSeries& fp,
                                            Cx z1, Cx z2, double separation_tol, double max_r) {
  for (int it = 0; it < 60; ++it) {
    const Cx f1 = evaluate(f, DiskPoint(z1));
    const Cx f2 = evaluate(f, DiskPoint(z2));
    const Cx r = f1 - f2;
    const double residual = std::abs(r);
    if (residual < kCollisionTol * std::max(1.0, std::abs(f1)) &&
        std::abs(z1 - z2) > separation_tol)
      return CollisionWitness{z1, z2, f1, f2, residual};
    const Cx d1 = evaluate(fp, DiskPoint(z1));
    const Cx d2 = evaluate(fp, DiskPoint(z2));
    const double dd = std::norm(d1) + std::norm(d2);
    if (dd < 1e-30) return std::nullopt;
    const Cx s1 = -std::conj(d1) * r / dd;
    const Cx s2 = std::conj(d2) * r / dd;
    double damp = 1.0;
    int backoff = 0;
    for (; backoff < 8; ++backoff) {
      const Cx n1 = z1 + damp * s1;
      const Cx n2 = z2 + damp * s2;
      if (std::abs(n1) <= max_r && std::abs(n2) <= max_r &&
          std::abs(n1 - n2) > 0.5 * separation_tol) {
        z1 = n1;
        z2 = n2;
        break;
      }
      damp *= 0.5;
    }
    if (backoff == 8) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

InjectivityReport injectivity_probe(const TaylorSeries& f, const DiskGrid& grid,
                                    double separation_tol) {
  if (!(separation_tol > 0.0)) throw Error("separation tolerance must be positive");
  const std::vector<DiskPoint> pts = grid.points();
  const std::size_t m = static_cast<std::size_t>(grid.angles_per_radius());
  std::size_t stride = 1;
  while (pts.size() / stride > 4096) stride *= 2;

  std::vector<Cx> cz, cf;
  cz.reserve(pts.size() / stride + 1);
  cf.reserve(pts.size() / stride + 1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if ((i % m) % stride != 0) continue;
    cz.push_back(pts[i].value());
    cf.push_back(evaluate(f, pts[i]));
  }

  struct Candidate {
    double score;
    std::size_t i, j;
  };
  constexpr std::size_t kKeep = 48;
  std::vector<Candidate> best;
  best.reserve(kKeep + 1);
  double cutoff = std::numeric_limits<double>::infinity();
  const double sep2 = separation_tol * separation_tol;
  for (std::size_t i = 0; i < cz.size(); ++i) {
    for (std::size_t j = i + 1; j < cz.size(); ++j) {
      if (std::norm(cz[i] - cz[j]) <= sep2) continue;
      const double score = std::norm(cf[i] - cf[j]);
      const double lit = kCollisionTol * std::max(1.0, std::abs(cf[i]));
      if (score < lit * lit)
        return {false, CollisionWitness{cz[i], cz[j], cf[i], cf[j], std::sqrt(score)}};
      if (score >= cutoff) continue;
      auto pos = std::lower_bound(best.begin(), best.end(), score,
                                  [](const Candidate& c, double s) { return c.score < s; });
      best.insert(pos, {score, i, j});
      if (best.size() > kKeep) best.pop_back();
      if (best.size() == kKeep) cutoff = best.back().score;
    }
  }

  const TaylorSeries fp = derivative(f);
  for (const Candidate& c : best) {
    if (auto hit = refine_pair(f, fp, cz[c.i], cz[c.j], separation_tol, grid.max_radius()))
      return {false, hit};
  }
  return {true, std::nullopt};
}

std::vector<CoefficientBoundRow> g_coefficient_report(const TaylorSeries& f) {
  require_normalized(f, "g_coefficient_report");
  std::vector<CoefficientBoundRow> rows;
  rows.reserve(static_cast<std::size_t>(f.order() - 1));
  for (int n = 2; n <= f.order(); ++n) {
    const double modulus = std::abs(f.coeff(n));
    const double bound = 0.5 * static_cast<double>(n + 1);
    double slack = bound - modulus;
    // |a_n| within a few ulp of the bound counts as the equality case.
    if (std::abs(slack) <= 16.0 * std::numeric_limits<double>::epsilon() * bound) slack = 0.0;
    rows.push_back({n, modulus, bound, slack});
  }
  return rows;
}

}  // namespace schlicht
