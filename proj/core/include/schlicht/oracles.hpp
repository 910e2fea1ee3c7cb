#pragma once
// Grid-based membership oracles built from each class's defining pointwise quantity.
// Strict open-disk inequalities are only ever certified on a compact grid; every
// verdict carries the grid and a truncation tail bound.

#include <optional>
#include <vector>

#include "schlicht/families.hpp"
#include "schlicht/series.hpp"

namespace schlicht {

class DiskGrid {
 public:
  DiskGrid(std::vector<double> radii, int angles_per_radius);
  static DiskGrid geometric(int num_radii, int angles_per_radius,
                            double r_min = 0.1, double r_max = 0.99);

  const std::vector<double>& radii() const { return radii_; }
  int angles_per_radius() const { return angles_; }
  double max_radius() const { return radii_.back(); }
  // Fixed radius-major, angle-minor order; argmin/argmax ties keep the first point.
  std::vector<DiskPoint> points() const;

 private:
  std::vector<double> radii_;
  int angles_;
};

DiskGrid default_grid();

enum class Verdict { holds_on_grid, violated };

struct MembershipVerdict {
  Verdict verdict;
  double margin;
  DiskPoint witness;
  double tail_bound;
  DiskGrid grid;
  bool conditional = false;
};

enum class HalfplaneKind { starlike, convex_shift };

TaylorSeries u_defect_series(const TaylorSeries& f);
Cx u_defect(const TaylorSeries& f, const DiskPoint& z);
MembershipVerdict membership_u(const TaylorSeries& f, double lambda, const DiskGrid& grid);

TaylorSeries halfplane_field_series(const TaylorSeries& f, HalfplaneKind kind);
Cx halfplane_field(const TaylorSeries& f, HalfplaneKind kind, const DiskPoint& z);
MembershipVerdict membership_halfplane(const TaylorSeries& f, HalfplaneKind kind,
                                       double threshold, const DiskGrid& grid);
MembershipVerdict membership_ctc(const TaylorSeries& f, const TaylorSeries& g,
                                 double alpha, const DiskGrid& grid);
bool alexander_check(const TaylorSeries& f, const DiskGrid& grid);
MembershipVerdict nonvanishing_check(const TaylorSeries& f, const DiskGrid& grid);
// Local-univalence proxy: sweeps |f'| the same way; no equivalence with class
// membership is claimed.
MembershipVerdict derivative_nonvanishing_check(const TaylorSeries& f, const DiskGrid& grid);

struct CollisionWitness {
  Cx z1, z2;
  Cx f1, f2;
  double residual;
};

struct InjectivityReport {
  bool injective_on_grid;
  std::optional<CollisionWitness> collision;
};

InjectivityReport injectivity_probe(const TaylorSeries& f, const DiskGrid& grid,
                                    double separation_tol);

struct CoefficientBoundRow {
  int n;
  double modulus;
  double bound;
  double slack;
};

std::vector<CoefficientBoundRow> g_coefficient_report(const TaylorSeries& f);

}  // namespace schlicht
