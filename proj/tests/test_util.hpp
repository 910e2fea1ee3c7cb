#pragma once

#include <cmath>

#include "schlicht/families.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

inline bool cx_close(Cx a, Cx b, double tol) { return std::abs(a - b) <= tol; }

inline bool angle_close(double a, double b, double tol) {
  return angular_distance(CirclePoint(a), CirclePoint(b)) <= tol;
}

inline bool series_close(const TaylorSeries& a, const TaylorSeries& b, double tol) {
  if (a.order() != b.order()) return false;
  for (int n = 0; n <= a.order(); ++n)
    if (!cx_close(a.coeff(n), b.coeff(n), tol)) return false;
  return true;
}

inline TaylorSeries poly(std::vector<Cx> coeffs, int order) {
  coeffs.resize(static_cast<std::size_t>(order) + 1, Cx(0.0, 0.0));
  return TaylorSeries(std::move(coeffs));
}

}  // namespace schlicht
