#include "schlicht/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "schlicht/errors.hpp"

namespace schlicht {

FunctionalSpec FunctionalSpec::finite(std::vector<Cx> coeffs) {
  if (coeffs.empty()) throw InvalidFunctionalError("functional needs at least one coefficient");
  for (const Cx& b : coeffs)
    if (!std::isfinite(b.real()) || !std::isfinite(b.imag()))
      throw NonFiniteError("functional coefficients must be finite");
  FunctionalSpec spec;
  spec.coeffs_ = std::move(coeffs);
  return spec;
}

FunctionalSpec FunctionalSpec::generator(Cx c, double rho) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
    throw NonFiniteError("generator scale must be finite");
  if (!(rho > 0.0) || !(rho < 1.0))
    throw InvalidFunctionalError("generator ratio must lie in (0, 1)");
  FunctionalSpec spec;
  spec.is_generator_ = true;
  spec.c_ = c;
  spec.rho_ = rho;
  return spec;
}

Cx FunctionalSpec::term(int n) const {
  if (n < 1) return Cx(0.0, 0.0);
  if (is_generator_) return c_ * std::pow(rho_, static_cast<double>(n - 1));
  const std::size_t idx = static_cast<std::size_t>(n - 1);
  return idx < coeffs_.size() ? coeffs_[idx] : Cx(0.0, 0.0);
}

int FunctionalSpec::effective_support() const {
  if (!is_generator_) return static_cast<int>(coeffs_.size());
  // rho^(n-1) below 1e-30 contributes nothing at double precision.
  const int n = static_cast<int>(std::ceil(std::log(1e-30) / std::log(rho_))) + 8;
  return std::min(kGeneratorSupportCap, std::max(8, n));
}

FunctionalValue evaluate_functional(const FunctionalSpec& spec, const TaylorSeries& f) {
  if (spec.decay_ratio() >= 1.0)
    throw InvalidFunctionalError("functional decay ratio must be below 1");
  const int order = f.order();
  Cx value(0.0, 0.0);
  if (spec.is_generator()) {
    Cx p = spec.generator_c();
    const int support = spec.effective_support();
    for (int n = 1; n <= std::min(order, support); ++n) {
      value += p * f.coeff(n);
      p *= spec.generator_rho();
    }
  } else {
    const std::vector<Cx>& b = spec.finite_coeffs();
    const int m = std::min<int>(order, static_cast<int>(b.size()));
    for (int n = 1; n <= m; ++n) {
      const Cx bn = b[static_cast<std::size_t>(n - 1)];
      if (bn == Cx(0.0, 0.0)) continue;
      value += bn * f.coeff(n);
    }
  }
  const double slope = linear_slope_estimate(f);
  double tail = 0.0;
  if (spec.is_generator()) {
    // |a_n| <= slope * n gives sum_{n>N} |b_n a_n| <= |c| * slope * sum n rho^n / rho.
    tail = std::abs(spec.generator_c()) *
           linear_growth_tail(slope, order, spec.generator_rho()) / spec.generator_rho();
  } else {
    const std::vector<Cx>& b = spec.finite_coeffs();
    for (int n = order + 1; n <= static_cast<int>(b.size()); ++n)
      tail += std::abs(b[static_cast<std::size_t>(n - 1)]) * slope * static_cast<double>(n);
  }
  return {value, tail};
}

double family_coefficient_scale(FamilyId family, int n) {
  return family == FamilyId::koebe_family ? static_cast<double>(n)
                                          : 0.5 * static_cast<double>(n + 1);
}

Cx family_coefficient(FamilyId family, int n, const CirclePoint& x) {
  return family_coefficient_scale(family, n) * x.power(n - 1);
}

Cx G_of_x(const FunctionalSpec& spec, FamilyId family, const CirclePoint& x) {
  const int support = spec.effective_support();
  Cx value = spec.term(1);
  for (int n = 2; n <= support; ++n) {
    const Cx bn = spec.term(n);
    if (bn == Cx(0.0, 0.0)) continue;
    value += bn * family_coefficient(family, n, x);
  }
  return value;
}

namespace {

// G at an arbitrary nonzero complex argument, via iterated powers; used for the
// reflected evaluation in H so it never routes through CirclePoint.
Cx G_at(const FunctionalSpec& spec, FamilyId family, Cx x) {
  const int support = spec.effective_support();
  Cx value = spec.term(1);
  Cx p(1.0, 0.0);
  for (int n = 2; n <= support; ++n) {
    p *= x;
    const Cx bn = spec.term(n);
    if (bn == Cx(0.0, 0.0)) continue;
    value += bn * family_coefficient_scale(family, n) * p;
  }
  return value;
}

}  // namespace

double H_of_x(const FunctionalSpec& spec, FamilyId family, const CirclePoint& x) {
  const Cx refl = G_at(spec, family, 1.0 / std::conj(x.value()));
  return (0.5 * (G_of_x(spec, family, x) + std::conj(refl))).real();
}

namespace {

double re_G(const FunctionalSpec& spec, FamilyId family, double theta) {
  return G_of_x(spec, family, CirclePoint(theta)).real();
}

// First and second theta-derivatives of Re G along the circle:
// d/dtheta x^(n-1) = i (n-1) x^(n-1), so dRe/dtheta = -Im S1, d2 = -Re S2.
void re_G_derivs(const FunctionalSpec& spec, FamilyId family, double theta,
                 double* d1, double* d2) {
  const CirclePoint x(theta);
  const int support = spec.effective_support();
  Cx s1(0.0, 0.0), s2(0.0, 0.0);
  for (int n = 2; n <= support; ++n) {
    const Cx bn = spec.term(n);
    if (bn == Cx(0.0, 0.0)) continue;
    const Cx t = bn * family_coefficient_scale(family, n) * x.power(n - 1);
    const double k = static_cast<double>(n - 1);
    s1 += t * k;
    s2 += t * (k * k);
  }
  *d1 = -s1.imag();
  *d2 = -s2.real();
}

double golden_refine(const FunctionalSpec& spec, FamilyId family,
                     double lo, double hi, double tol) {
  constexpr double gr = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = re_G(spec, family, c);
  double fd = re_G(spec, family, d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = re_G(spec, family, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = re_G(spec, family, d);
    }
  }
  return 0.5 * (a + b);
}

double newton_polish(const FunctionalSpec& spec, FamilyId family,
                     double theta, double h) {
  double t = theta;
  for (int it = 0; it < 12; ++it) {
    double d1, d2;
    re_G_derivs(spec, family, t, &d1, &d2);
    if (d2 >= 0.0) break;
    const double step = -d1 / d2;
    if (!(std::abs(step) < h)) break;
    t += step;
    if (std::abs(step) < 1e-15) break;
  }
  return t;
}

}  // namespace

CircleMaxResult maximize_on_circle(const FunctionalSpec& spec, FamilyId family,
                                   int coarse_samples, double refine_tol) {
  if (coarse_samples < 256) throw Error("coarse sampling needs at least 256 points");
  if (!(refine_tol > 0.0)) throw Error("refine tolerance must be positive");

  const double h = kTwoPi / static_cast<double>(coarse_samples);
  std::vector<double> vals(static_cast<std::size_t>(coarse_samples));
  double vmax = -std::numeric_limits<double>::infinity();
  double vmin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < coarse_samples; ++i) {
    const double v = re_G(spec, family, h * static_cast<double>(i));
    vals[static_cast<std::size_t>(i)] = v;
    vmax = std::max(vmax, v);
    vmin = std::min(vmin, v);
  }
  if (vmax - vmin <= 10.0 * refine_tol * std::max(1.0, std::abs(vmax)))
    return {vmax, {}, true, coarse_samples};

  struct Peak {
    double theta, value;
  };
  std::vector<Peak> peaks;
  for (int i = 0; i < coarse_samples; ++i) {
    const double v = vals[static_cast<std::size_t>(i)];
    const double prev = vals[static_cast<std::size_t>((i + coarse_samples - 1) % coarse_samples)];
    const double next = vals[static_cast<std::size_t>((i + 1) % coarse_samples)];
    if (v >= prev && v >= next) peaks.push_back({h * static_cast<double>(i), v});
  }
  std::sort(peaks.begin(), peaks.end(),
            [](const Peak& a, const Peak& b) { return a.value > b.value; });
  if (peaks.size() > 64) peaks.resize(64);

  double best = -std::numeric_limits<double>::infinity();
  std::vector<Peak> refined;
  refined.reserve(peaks.size());
  for (const Peak& p : peaks) {
    double t = golden_refine(spec, family, p.theta - h, p.theta + h, refine_tol);
    t = newton_polish(spec, family, t, h);
    const double v = re_G(spec, family, t);
    refined.push_back({t, v});
    best = std::max(best, v);
  }

  const double keep = refine_tol * std::max(1.0, std::abs(best));
  std::vector<double> winners;
  for (const Peak& p : refined)
    if (best - p.value <= keep) winners.push_back(CirclePoint(p.theta).theta());
  std::sort(winners.begin(), winners.end());

  std::vector<double> maximizers;
  for (double t : winners) {
    bool dup = false;
    for (double m : maximizers)
      if (angular_distance(CirclePoint(t), CirclePoint(m)) < kClusterTol) {
        dup = true;
        break;
      }
    if (!dup) maximizers.push_back(t);
  }
  return {best, maximizers, false, coarse_samples};
}

bool nonconstancy_check(const FunctionalSpec& spec, FamilyId family, int samples) {
  if (samples < 256) throw Error("nonconstancy check needs at least 256 samples");
  const double h = kTwoPi / static_cast<double>(samples);
  double vmax = -std::numeric_limits<double>::infinity();
  double vmin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    const double v = re_G(spec, family, h * static_cast<double>(i));
    vmax = std::max(vmax, v);
    vmin = std::min(vmin, v);
  }
  return vmax - vmin > 10.0 * kDefaultRefineTol * std::max(1.0, std::abs(vmax));
}

std::vector<SweepRow> circle_sweep(const FunctionalSpec& spec, FamilyId family,
                                   int samples) {
  if (samples < 8) throw Error("sweep needs at least 8 samples");
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  const double h = kTwoPi / static_cast<double>(samples);
  for (int i = 0; i < samples; ++i) {
    const double theta = h * static_cast<double>(i);
    const CirclePoint x(theta);
    rows.push_back({theta, G_of_x(spec, family, x), H_of_x(spec, family, x)});
  }
  return rows;
}

}  // namespace schlicht
