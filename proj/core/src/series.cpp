#include "schlicht/series.hpp"

#include <algorithm>
#include <cmath>

namespace schlicht {

namespace {

bool finite(Cx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

}  // namespace

TaylorSeries::TaylorSeries(std::vector<Cx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw Error("series order must be at least 1");
  for (const Cx& c : coeffs_)
    if (!finite(c)) throw NonFiniteError("series coefficients must be finite");
}

TaylorSeries TaylorSeries::zero(int order) {
  if (order < 1) throw Error("series order must be at least 1");
  return TaylorSeries(std::vector<Cx>(static_cast<std::size_t>(order) + 1, Cx(0.0, 0.0)));
}

bool TaylorSeries::is_normalized(double tol) const {
  return std::abs(coeffs_[0]) <= tol && std::abs(coeffs_[1] - Cx(1.0, 0.0)) <= tol;
}

DiskPoint::DiskPoint(Cx z) : z_(z) {
  if (!finite(z)) throw NonFiniteError("disk point must be finite");
  if (std::abs(z) > kRhoMax) throw OutOfDomainError("evaluation point outside |z| <= rho_max");
}

TaylorSeries linear_combine(const std::vector<std::pair<Cx, TaylorSeries>>& terms) {
  if (terms.empty()) throw Error("linear_combine needs at least one term");
  const int order = terms.front().second.order();
  std::vector<Cx> out(static_cast<std::size_t>(order) + 1, Cx(0.0, 0.0));
  for (const auto& [weight, s] : terms) {
    if (s.order() != order) throw OrderMismatchError("linear_combine: mixed truncation orders");
    for (std::size_t n = 0; n < out.size(); ++n) out[n] += weight * s.coeffs()[n];
  }
  return TaylorSeries(std::move(out));
}

TaylorSeries cauchy_product(const TaylorSeries& a, const TaylorSeries& b) {
  if (a.order() != b.order()) throw OrderMismatchError("cauchy_product: mixed truncation orders");
  const std::size_t m = a.coeffs().size();
  std::vector<Cx> out(m);
  for (std::size_t n = 0; n < m; ++n) {
    Cx acc(0.0, 0.0);
    for (std::size_t k = 0; k <= n; ++k) acc += a.coeffs()[k] * b.coeffs()[n - k];
    out[n] = acc;
  }
  return TaylorSeries(std::move(out));
}

TaylorSeries reciprocal(const TaylorSeries& a) {
  if (std::abs(a.coeffs()[0]) <= kInvertTol)
    throw NonInvertibleError("reciprocal: constant term below invertibility tolerance");
  const std::size_t m = a.coeffs().size();
  std::vector<Cx> out(m, Cx(0.0, 0.0));
  out[0] = 1.0 / a.coeffs()[0];
  for (std::size_t n = 1; n < m; ++n) {
    Cx acc(0.0, 0.0);
    for (std::size_t k = 1; k <= n; ++k) acc += a.coeffs()[k] * out[n - k];
    const Cx bn = -acc / a.coeffs()[0];
    if (!finite(bn) || std::abs(bn) > kCoeffCap) break;
    out[n] = bn;
  }
  return TaylorSeries(std::move(out));
}

TaylorSeries divide(const TaylorSeries& num, const TaylorSeries& den) {
  if (num.order() != den.order()) throw OrderMismatchError("divide: mixed truncation orders");
  if (std::abs(den.coeffs()[0]) <= kInvertTol)
    throw NonInvertibleError("divide: denominator constant term below invertibility tolerance");
  const std::size_t m = num.coeffs().size();
  std::vector<Cx> out(m, Cx(0.0, 0.0));
  for (std::size_t n = 0; n < m; ++n) {
    Cx acc = num.coeffs()[n];
    for (std::size_t k = 0; k < n; ++k) acc -= out[k] * den.coeffs()[n - k];
    const Cx qn = acc / den.coeffs()[0];
    if (!finite(qn) || std::abs(qn) > kCoeffCap) break;
    out[n] = qn;
  }
  return TaylorSeries(std::move(out));
}

TaylorSeries derivative(const TaylorSeries& a) {
  const std::size_t m = a.coeffs().size();
  std::vector<Cx> out(m, Cx(0.0, 0.0));
  for (std::size_t n = 0; n + 1 < m; ++n)
    out[n] = static_cast<double>(n + 1) * a.coeffs()[n + 1];
  return TaylorSeries(std::move(out));
}

TaylorSeries divide_by_z(const TaylorSeries& a) {
  if (std::abs(a.coeffs()[0]) > kNormalizedTol)
    throw DegenerateSeriesError("divide_by_z: nonzero constant term");
  if (a.order() < 2) throw Error("divide_by_z needs order >= 2");
  std::vector<Cx> out(a.coeffs().begin() + 1, a.coeffs().end());
  return TaylorSeries(std::move(out));
}

TaylorSeries multiply_by_z(const TaylorSeries& a) {
  std::vector<Cx> out(a.coeffs().size(), Cx(0.0, 0.0));
  for (std::size_t n = 1; n < out.size(); ++n) out[n] = a.coeffs()[n - 1];
  return TaylorSeries(std::move(out));
}

TaylorSeries truncated(const TaylorSeries& a, int order) {
  if (order < 1 || order > a.order()) throw Error("truncated: target order out of range");
  std::vector<Cx> out(a.coeffs().begin(), a.coeffs().begin() + order + 1);
  return TaylorSeries(std::move(out));
}

TaylorSeries padded(const TaylorSeries& a, int order) {
  if (order < a.order()) throw Error("padded: target order below current order");
  std::vector<Cx> out = a.coeffs();
  out.resize(static_cast<std::size_t>(order) + 1, Cx(0.0, 0.0));
  return TaylorSeries(std::move(out));
}

Cx evaluate(const TaylorSeries& a, const DiskPoint& z) {
  const std::vector<Cx>& c = a.coeffs();
  std::size_t top = c.size() - 1;
  while (top > 0 && c[top] == Cx(0.0, 0.0)) --top;
  const Cx zz = z.value();
  Cx acc = c[top];
  for (std::size_t n = top; n > 0; --n) acc = acc * zz + c[n - 1];
  return acc;
}

double linear_slope_estimate(const TaylorSeries& a) {
  double slope = 0.0;
  for (std::size_t n = 0; n < a.coeffs().size(); ++n) {
    const double den = std::max<double>(1.0, static_cast<double>(n));
    slope = std::max(slope, std::abs(a.coeffs()[n]) / den);
  }
  return slope;
}

double linear_growth_tail(double slope, int order, double rho) {
  const double n1 = static_cast<double>(order) + 1.0;
  const double q = 1.0 - rho;
  return slope * std::pow(rho, n1) * (n1 * q + rho) / (q * q);
}

}  // namespace schlicht
