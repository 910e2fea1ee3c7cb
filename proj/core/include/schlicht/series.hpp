#pragma once
// Truncated power-series arithmetic about z = 0 on the unit disk.

#include <complex>
#include <utility>
#include <vector>

#include "schlicht/errors.hpp"

namespace schlicht {

using Cx = std::complex<double>;

inline constexpr int kDefaultOrder = 2048;
inline constexpr double kRhoMax = 0.999;
inline constexpr double kInvertTol = 1e-12;
inline constexpr double kNormalizedTol = 1e-9;
// Quotient coefficients past this magnitude are frozen to zero: the input had a
// pole inside the disk and the finite prefix already decides every verdict.
inline constexpr double kCoeffCap = 1e120;

class TaylorSeries {
 public:
  explicit TaylorSeries(std::vector<Cx> coeffs);
  static TaylorSeries zero(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Cx>& coeffs() const { return coeffs_; }
  Cx coeff(int n) const { return coeffs_[static_cast<std::size_t>(n)]; }
  bool is_normalized(double tol = kNormalizedTol) const;

 private:
  std::vector<Cx> coeffs_;
};

class DiskPoint {
 public:
  DiskPoint() : z_(0.0, 0.0) {}
  explicit DiskPoint(Cx z);
  Cx value() const { return z_; }

 private:
  Cx z_;
};

TaylorSeries linear_combine(const std::vector<std::pair<Cx, TaylorSeries>>& terms);
TaylorSeries cauchy_product(const TaylorSeries& a, const TaylorSeries& b);
TaylorSeries reciprocal(const TaylorSeries& a);
TaylorSeries divide(const TaylorSeries& num, const TaylorSeries& den);
TaylorSeries derivative(const TaylorSeries& a);
TaylorSeries divide_by_z(const TaylorSeries& a);
TaylorSeries multiply_by_z(const TaylorSeries& a);
TaylorSeries truncated(const TaylorSeries& a, int order);
TaylorSeries padded(const TaylorSeries& a, int order);
Cx evaluate(const TaylorSeries& a, const DiskPoint& z);

// Smallest C with |a_n| <= C*n over the stored prefix (n = 0 counted as 1).
double linear_slope_estimate(const TaylorSeries& a);
// C * sum_{n > order} n rho^n in closed form.
double linear_growth_tail(double slope, int order, double rho);

}  // namespace schlicht
