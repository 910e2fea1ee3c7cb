#include <benchmark/benchmark.h>

#include "schlicht/certify.hpp"

namespace {

using namespace schlicht;

void BM_CauchyProduct(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const TaylorSeries f = koebe_series(CirclePoint(0.7), order);
  const TaylorSeries g = g_extreme_series(CirclePoint(1.3), order);
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_product(f, g));
}
BENCHMARK(BM_CauchyProduct)->Arg(256)->Arg(1024)->Arg(2048);

void BM_Reciprocal(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const TaylorSeries w = divide_by_z(koebe_series(CirclePoint(0.7), order));
  for (auto _ : state) benchmark::DoNotOptimize(reciprocal(w));
}
BENCHMARK(BM_Reciprocal)->Arg(256)->Arg(1024)->Arg(2048);

void BM_UDefectSweep(benchmark::State& state) {
  const TaylorSeries f = koebe_series(CirclePoint(0.7), kDefaultOrder);
  const DiskGrid grid = default_grid();
  for (auto _ : state) benchmark::DoNotOptimize(membership_u(f, 1.0, grid));
}
BENCHMARK(BM_UDefectSweep);

void BM_MaximizeOnCircle(benchmark::State& state) {
  const FunctionalSpec spec =
      FunctionalSpec::finite({Cx(0, 0), Cx(0.4, 0.1), Cx(1, 0), Cx(0, -0.2)});
  for (auto _ : state)
    benchmark::DoNotOptimize(maximize_on_circle(spec, FamilyId::koebe_family));
}
BENCHMARK(BM_MaximizeOnCircle);

void BM_InjectivityProbe(benchmark::State& state) {
  const AtomicMeasure mu({{0.5, CirclePoint(0.0)}, {0.5, CirclePoint(3.141592653589793)}});
  const TaylorSeries f = hull_member(mu, FamilyId::koebe_family, kDefaultOrder);
  const DiskGrid grid = default_grid();
  for (auto _ : state)
    benchmark::DoNotOptimize(injectivity_probe(f, grid, kDefaultSeparationTol));
}
BENCHMARK(BM_InjectivityProbe);

void BM_CertifyExtreme(benchmark::State& state) {
  const CirclePoint x0(0.9);
  CertifyConfig config;
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_extreme_support(x0, FamilyId::koebe_family, config));
}
BENCHMARK(BM_CertifyExtreme);

}  // namespace

BENCHMARK_MAIN();
