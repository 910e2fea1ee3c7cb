#include <cmath>
#include <limits>

#include <doctest.h>

#include "schlicht/families.hpp"
#include "schlicht/series.hpp"
#include "test_util.hpp"

using namespace schlicht;

TEST_CASE("series construction and accessors") {
  const TaylorSeries f = poly({Cx(0, 0), Cx(1, 0), Cx(2, 1)}, 2);
  CHECK(f.order() == 2);
  CHECK(f.coeff(2) == Cx(2, 1));
  CHECK(f.is_normalized());
  CHECK_FALSE(poly({Cx(0.5, 0), Cx(1, 0)}, 1).is_normalized());
  CHECK_FALSE(poly({Cx(0, 0), Cx(2, 0)}, 1).is_normalized());

  CHECK_THROWS_AS(TaylorSeries({Cx(1, 0)}), Error);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(TaylorSeries({Cx(0, 0), Cx(inf, 0)}), NonFiniteError);

  const TaylorSeries z4 = TaylorSeries::zero(4);
  CHECK(z4.order() == 4);
  for (int n = 0; n <= 4; ++n) CHECK(z4.coeff(n) == Cx(0, 0));
}

TEST_CASE("disk point domain") {
  CHECK(DiskPoint(Cx(0.5, 0.5)).value() == Cx(0.5, 0.5));
  CHECK_THROWS_AS(DiskPoint(Cx(1.0, 0.0)), OutOfDomainError);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(DiskPoint(Cx(nan, 0.0)), NonFiniteError);
}

TEST_CASE("linear_combine identities") {
  const TaylorSeries f = koebe_series(CirclePoint(0.7), 16);

  const TaylorSeries one = linear_combine({{Cx(1, 0), f}});
  const TaylorSeries half = linear_combine({{Cx(0.5, 0), f}, {Cx(0.5, 0), f}});
  for (int n = 0; n <= 16; ++n) {
    CHECK(one.coeff(n) == f.coeff(n));
    CHECK(half.coeff(n) == f.coeff(n));
  }

  const TaylorSeries avg = linear_combine({{Cx(0.5, 0), koebe_series(CirclePoint(0.0), 8)},
                                           {Cx(0.5, 0), koebe_series(CirclePoint(3.141592653589793), 8)}});
  CHECK(std::abs(avg.coeff(2)) < 1e-14);
  CHECK(cx_close(avg.coeff(3), Cx(3, 0), 1e-14));

  CHECK_THROWS_AS(linear_combine({}), Error);
  CHECK_THROWS_AS(linear_combine({{Cx(1, 0), f}, {Cx(1, 0), koebe_series(CirclePoint(0.7), 8)}}),
                  OrderMismatchError);
}

TEST_CASE("cauchy product") {
  const TaylorSeries p = cauchy_product(poly({Cx(1, 0), Cx(1, 0)}, 2),
                                        poly({Cx(1, 0), Cx(-1, 0)}, 2));
  CHECK(p.coeff(0) == Cx(1, 0));
  CHECK(p.coeff(1) == Cx(0, 0));
  CHECK(p.coeff(2) == Cx(-1, 0));

  SUBCASE("geometric series squared, real parameter") {
    std::vector<Cx> g(13, Cx(1, 0));
    const TaylorSeries sq = cauchy_product(TaylorSeries(g), TaylorSeries(g));
    for (int n = 0; n <= 12; ++n) CHECK(sq.coeff(n) == Cx(n + 1, 0));
  }

  SUBCASE("geometric series squared, unimodular parameter") {
    const CirclePoint x(2.1);
    std::vector<Cx> g(13);
    for (int n = 0; n <= 12; ++n) g[static_cast<std::size_t>(n)] = x.power(n);
    const TaylorSeries sq = cauchy_product(TaylorSeries(g), TaylorSeries(g));
    for (int n = 0; n <= 12; ++n)
      CHECK(cx_close(sq.coeff(n), static_cast<double>(n + 1) * x.power(n), 1e-13 * (n + 1)));
  }

  SUBCASE("w times 1/w is 1") {
    const TaylorSeries w = divide_by_z(koebe_series(CirclePoint(1.2), 64));
    const TaylorSeries p1 = cauchy_product(w, reciprocal(w));
    CHECK(cx_close(p1.coeff(0), Cx(1, 0), 1e-12));
    for (int n = 1; n <= w.order(); ++n) CHECK(std::abs(p1.coeff(n)) < 1e-12);
  }

  CHECK_THROWS_AS(cauchy_product(poly({Cx(1, 0)}, 2), poly({Cx(1, 0)}, 3)),
                  OrderMismatchError);
}

TEST_CASE("reciprocal") {
  const TaylorSeries ones = reciprocal(poly({Cx(1, 0), Cx(-1, 0)}, 10));
  for (int n = 0; n <= 10; ++n) CHECK(ones.coeff(n) == Cx(1, 0));

  const TaylorSeries counts = reciprocal(poly({Cx(1, 0), Cx(-2, 0), Cx(1, 0)}, 10));
  for (int n = 0; n <= 10; ++n) CHECK(counts.coeff(n) == Cx(n + 1, 0));

  const TaylorSeries halves = reciprocal(poly({Cx(2, 0)}, 3));
  CHECK(halves.coeff(0) == Cx(0.5, 0));
  for (int n = 1; n <= 3; ++n) CHECK(halves.coeff(n) == Cx(0, 0));

  CHECK_THROWS_AS(reciprocal(poly({Cx(0, 0), Cx(1, 0)}, 1)), NonInvertibleError);

  SUBCASE("involution") {
    const TaylorSeries w = divide_by_z(koebe_series(CirclePoint(0.9), 48));
    CHECK(series_close(reciprocal(reciprocal(w)), w, 1e-12));
  }

  SUBCASE("explosive coefficients freeze at the cap") {
    const TaylorSeries r = reciprocal(poly({Cx(1, 0), Cx(0, 0), Cx(0, 0), Cx(50, 0)}, 600));
    CHECK(r.coeff(3) == Cx(-50, 0));
    CHECK(r.coeff(6) == Cx(2500, 0));
    CHECK(std::abs(r.coeff(210)) > 1e118);  // (-50)^70 still below the cap
    CHECK(r.coeff(213) == Cx(0, 0));        // (-50)^71 exceeds it; slot frozen
    for (int n = 0; n <= 600; ++n) {
      CHECK(std::isfinite(r.coeff(n).real()));
      CHECK(std::abs(r.coeff(n)) <= kCoeffCap);
    }
  }
}

TEST_CASE("divide") {
  const TaylorSeries q = poly({Cx(1, 0), Cx(0.3, -0.2), Cx(0, 0.5)}, 24);
  const TaylorSeries d = poly({Cx(2, 0), Cx(-1, 0.4), Cx(0.1, 0)}, 24);
  CHECK(series_close(divide(cauchy_product(q, d), d), q, 1e-12));

  CHECK_THROWS_AS(divide(poly({Cx(1, 0)}, 4), poly({Cx(0, 0), Cx(1, 0)}, 4)),
                  NonInvertibleError);
  CHECK_THROWS_AS(divide(poly({Cx(1, 0)}, 4), poly({Cx(1, 0)}, 5)), OrderMismatchError);
}

TEST_CASE("derivative") {
  const TaylorSeries dz = derivative(poly({Cx(0, 0), Cx(1, 0)}, 2));
  CHECK(dz.coeff(0) == Cx(1, 0));
  CHECK(dz.coeff(1) == Cx(0, 0));
  CHECK(dz.coeff(2) == Cx(0, 0));

  const CirclePoint x(1.4);
  const TaylorSeries dk = derivative(koebe_series(x, 16));
  CHECK(dk.coeff(0) == Cx(1, 0));
  CHECK(dk.coeff(1) == 4.0 * x.power(1));
  CHECK(dk.coeff(16) == Cx(0, 0));

  const TaylorSeries dc = derivative(poly({Cx(5, 0)}, 3));
  for (int n = 0; n <= 3; ++n) CHECK(dc.coeff(n) == Cx(0, 0));

  SUBCASE("linearity") {
    const TaylorSeries f = koebe_series(CirclePoint(0.3), 12);
    const TaylorSeries g = g_extreme_series(CirclePoint(2.0), 12);
    const TaylorSeries lhs = derivative(linear_combine({{Cx(2, 1), f}, {Cx(0, -3), g}}));
    const TaylorSeries rhs =
        linear_combine({{Cx(2, 1), derivative(f)}, {Cx(0, -3), derivative(g)}});
    CHECK(series_close(lhs, rhs, 1e-13));
  }
}

TEST_CASE("shifting and slicing") {
  const TaylorSeries s = poly({Cx(0, 0), Cx(1, 0), Cx(2, 0)}, 2);
  const TaylorSeries over_z = divide_by_z(s);
  CHECK(over_z.order() == 1);
  CHECK(over_z.coeff(0) == Cx(1, 0));
  CHECK(over_z.coeff(1) == Cx(2, 0));
  CHECK_THROWS_AS(divide_by_z(poly({Cx(0.5, 0), Cx(1, 0), Cx(0, 0)}, 2)),
                  DegenerateSeriesError);
  CHECK_THROWS_AS(divide_by_z(poly({Cx(0, 0), Cx(1, 0)}, 1)), Error);

  const TaylorSeries by_z = multiply_by_z(poly({Cx(1, 0), Cx(2, 0), Cx(3, 0)}, 2));
  CHECK(by_z.coeff(0) == Cx(0, 0));
  CHECK(by_z.coeff(1) == Cx(1, 0));
  CHECK(by_z.coeff(2) == Cx(2, 0));

  const TaylorSeries f = koebe_series(CirclePoint(0.4), 12);
  CHECK(series_close(truncated(padded(f, 20), 12), f, 0.0));
  CHECK(padded(f, 20).coeff(20) == Cx(0, 0));
  CHECK_THROWS_AS(truncated(f, 13), Error);
  CHECK_THROWS_AS(truncated(f, 0), Error);
  CHECK_THROWS_AS(padded(f, 11), Error);
}

TEST_CASE("evaluate") {
  CHECK(evaluate(poly({Cx(0.3, 0), Cx(0, 0)}, 1), DiskPoint()) == Cx(0.3, 0));
  CHECK(evaluate(koebe_series(CirclePoint(0.0), 8), DiskPoint()) == Cx(0, 0));

  // z/(1-z)^2 at z = 1/2 is exactly 2.
  const Cx v = evaluate(koebe_series(CirclePoint(0.0), 256), DiskPoint(Cx(0.5, 0)));
  CHECK(cx_close(v, Cx(2, 0), 1e-12));

  SUBCASE("multiplicative on polynomials") {
    const TaylorSeries a = poly({Cx(1, 0.5), Cx(-0.3, 0), Cx(0, 0.2)}, 8);
    const TaylorSeries b = poly({Cx(0.4, 0), Cx(1, -1), Cx(0.1, 0.1), Cx(0, -0.5)}, 8);
    const DiskPoint z(Cx(0.31, -0.44));
    CHECK(cx_close(evaluate(cauchy_product(a, b), z), evaluate(a, z) * evaluate(b, z), 1e-13));
  }
}

TEST_CASE("tail bounds") {
  CHECK(linear_slope_estimate(koebe_series(CirclePoint(0.8), 64)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(linear_slope_estimate(poly({Cx(0, 0), Cx(1, 0)}, 4)) == 1.0);

  // slope 1, order 2, rho 1/2: sum_{n>=3} n/2^n = 1 exactly.
  CHECK(linear_growth_tail(1.0, 2, 0.5) == doctest::Approx(1.0).epsilon(1e-12));

  double direct = 0.0;
  for (int n = 3; n <= 200; ++n) direct += n * std::pow(0.5, n);
  CHECK(linear_growth_tail(1.0, 2, 0.5) == doctest::Approx(direct).epsilon(1e-12));

  CHECK(linear_growth_tail(1.0, 64, 0.99) > linear_growth_tail(1.0, 64, 0.9));
  CHECK(linear_growth_tail(1.0, 64, 0.9) > linear_growth_tail(1.0, 128, 0.9));
}
