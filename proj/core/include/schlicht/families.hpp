#pragma once
// Extreme-point families of the two hulls and finite atomic combinations of them.

#include <vector>

#include "schlicht/series.hpp"

namespace schlicht {

inline constexpr double kTwoPi = 6.283185307179586;
inline constexpr double kTwoPiLo = 2.4492935982947064e-16;  // 2*pi - kTwoPi
inline constexpr double kAtomSeparationTol = 1e-9;

// Unimodular parameter stored as an angle so |x| = 1 holds exactly.
class CirclePoint {
 public:
  CirclePoint() : theta_(0.0) {}
  explicit CirclePoint(double theta);
  double theta() const { return theta_; }
  Cx value() const;
  Cx power(int k) const;  // e^{i k theta} with double-double angle reduction

 private:
  double theta_;
};

double angular_distance(const CirclePoint& a, const CirclePoint& b);

enum class FamilyId { koebe_family, g_family };

struct Atom {
  double weight;
  CirclePoint x;
};

class AtomicMeasure {
 public:
  explicit AtomicMeasure(std::vector<Atom> atoms);
  const std::vector<Atom>& atoms() const { return atoms_; }

 private:
  std::vector<Atom> atoms_;
};

struct PoleReport {
  Cx location;
  int order;
};

TaylorSeries koebe_series(const CirclePoint& x, int order);
TaylorSeries g_extreme_series(const CirclePoint& x, int order);
TaylorSeries family_series(FamilyId family, const CirclePoint& x, int order);
TaylorSeries hull_member(const AtomicMeasure& mu, FamilyId family, int order);
std::vector<PoleReport> pole_set(const AtomicMeasure& mu);

}  // namespace schlicht
