#include "schlicht/families.hpp"

#include <cmath>
#include <utility>

namespace schlicht {

namespace {

double wrap_angle(double t) {
  double r = std::fmod(t, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

}  // namespace

CirclePoint::CirclePoint(double theta) {
  if (!std::isfinite(theta)) throw NonFiniteError("circle point angle must be finite");
  theta_ = wrap_angle(theta);
}

Cx CirclePoint::value() const { return std::polar(1.0, theta_); }

Cx CirclePoint::power(int k) const {
  // k*theta is carried as an fma-exact hi/lo pair through the 2*pi reduction.
  const double kd = static_cast<double>(k);
  const double p = kd * theta_;
  const double e = std::fma(kd, theta_, -p);
  const double q = std::floor(p / kTwoPi);
  double r = std::fma(-q, kTwoPi, p);
  r = std::fma(-q, kTwoPiLo, r) + e;
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  if (r < 0.0) r = 0.0;
  return std::polar(1.0, r);
}

double angular_distance(const CirclePoint& a, const CirclePoint& b) {
  const double d = std::abs(a.theta() - b.theta());
  return d > kTwoPi - d ? kTwoPi - d : d;
}

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw InvalidMeasureError("measure needs at least one atom");
  double total = 0.0;
  for (const Atom& a : atoms_) {
    if (!std::isfinite(a.weight) || a.weight < 0.0)
      throw InvalidMeasureError("atom weights must be nonnegative");
    total += a.weight;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw InvalidMeasureError("atom weights must sum to 1");
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    for (std::size_t j = i + 1; j < atoms_.size(); ++j)
      if (angular_distance(atoms_[i].x, atoms_[j].x) <= kAtomSeparationTol)
        throw InvalidMeasureError("atoms must be pairwise distinct on the circle");
}

TaylorSeries koebe_series(const CirclePoint& x, int order) {
  if (order < 2) throw Error("family series need order >= 2");
  std::vector<Cx> c(static_cast<std::size_t>(order) + 1, Cx(0.0, 0.0));
  c[1] = Cx(1.0, 0.0);
  for (int n = 2; n <= order; ++n)
    c[static_cast<std::size_t>(n)] = static_cast<double>(n) * x.power(n - 1);
  return TaylorSeries(std::move(c));
}

TaylorSeries g_extreme_series(const CirclePoint& x, int order) {
  if (order < 2) throw Error("family series need order >= 2");
  std::vector<Cx> c(static_cast<std::size_t>(order) + 1, Cx(0.0, 0.0));
  c[1] = Cx(1.0, 0.0);
  for (int n = 2; n <= order; ++n)
    c[static_cast<std::size_t>(n)] = (0.5 * static_cast<double>(n + 1)) * x.power(n - 1);
  return TaylorSeries(std::move(c));
}

TaylorSeries family_series(FamilyId family, const CirclePoint& x, int order) {
  return family == FamilyId::koebe_family ? koebe_series(x, order)
                                          : g_extreme_series(x, order);
}

TaylorSeries hull_member(const AtomicMeasure& mu, FamilyId family, int order) {
  std::vector<std::pair<Cx, TaylorSeries>> terms;
  terms.reserve(mu.atoms().size());
  for (const Atom& a : mu.atoms())
    terms.emplace_back(Cx(a.weight, 0.0), family_series(family, a.x, order));
  return linear_combine(terms);
}

std::vector<PoleReport> pole_set(const AtomicMeasure& mu) {
  std::vector<PoleReport> poles;
  for (const Atom& a : mu.atoms())
    if (a.weight > 0.0) poles.push_back({std::conj(a.x.value()), 2});
  return poles;
}

}  // namespace schlicht
