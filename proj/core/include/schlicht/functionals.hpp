#pragma once

#include <vector>

#include "schlicht/families.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

inline constexpr int kDefaultCoarseSamples = 4096;
inline constexpr double kDefaultRefineTol = 1e-12;
inline constexpr double kClusterTol = 1e-6;
inline constexpr int kGeneratorSupportCap = 32768;

// Continuous linear functional J(f) = sum_{n>=1} b_n a_n(f), held either as a
// finite coefficient list or as the geometric generator b_n = c rho^{n-1}.
class FunctionalSpec {
 public:
  static FunctionalSpec finite(std::vector<Cx> coeffs);
  static FunctionalSpec generator(Cx c, double rho);

  bool is_generator() const { return is_generator_; }
  const std::vector<Cx>& finite_coeffs() const { return coeffs_; }
  Cx generator_c() const { return c_; }
  double generator_rho() const { return rho_; }

  Cx term(int n) const;
  double decay_ratio() const { return is_generator_ ? rho_ : 0.0; }
  int effective_support() const;

 private:
  FunctionalSpec() = default;
  bool is_generator_ = false;
  std::vector<Cx> coeffs_;
  Cx c_{0.0, 0.0};
  double rho_ = 0.0;
};

struct FunctionalValue {
  Cx value;
  double tail_bound;
};

FunctionalValue evaluate_functional(const FunctionalSpec& spec, const TaylorSeries& f);

double family_coefficient_scale(FamilyId family, int n);
Cx family_coefficient(FamilyId family, int n, const CirclePoint& x);

// G(x) = b_1 + sum_{n>=2} b_n a_n(x) on the extremal family, x on the unit circle.
Cx G_of_x(const FunctionalSpec& spec, FamilyId family, const CirclePoint& x);

// H(x) = (G(x) + conj(G(1/conj(x))))/2, evaluated through the coefficient sum
// so the reflection is computed independently of G_of_x.
double H_of_x(const FunctionalSpec& spec, FamilyId family, const CirclePoint& x);

struct CircleMaxResult {
  double max_value;
  std::vector<double> maximizers;  // ascending angles in [0, 2pi)
  bool is_constant;
  int samples;
};

CircleMaxResult maximize_on_circle(const FunctionalSpec& spec, FamilyId family,
                                   int coarse_samples = kDefaultCoarseSamples,
                                   double refine_tol = kDefaultRefineTol);

bool nonconstancy_check(const FunctionalSpec& spec, FamilyId family,
                        int samples = 256);

struct SweepRow {
  double theta;
  Cx g;
  double h;
};

std::vector<SweepRow> circle_sweep(const FunctionalSpec& spec, FamilyId family,
                                   int samples);

}  // namespace schlicht
