#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "steklov/radial.hpp"
#include "test_util.hpp"

using namespace steklov;

namespace {

std::vector<double> log_grid(double lo, double hi, int count) {
  std::vector<double> r(count);
  for (int i = 0; i < count; ++i)
    r[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
  return r;
}

}  // namespace

TEST_CASE("sin_k and cos_k branches") {
  CHECK(sin_k(SpaceForm::Flat, 1.5) == 1.5);
  CHECK(sin_k(SpaceForm::Hyperbolic, 0.0) == 0.0);
  // sinh 1 cross-checked against (e - 1/e)/2
  CHECK(sin_k(SpaceForm::Hyperbolic, 1.0) ==
        doctest::Approx((std::exp(1.0) - std::exp(-1.0)) / 2.0).epsilon(1e-15));
  CHECK(sin_k(SpaceForm::Hyperbolic, 1.0) == doctest::Approx(1.1752011936438014).epsilon(1e-15));
  CHECK(cos_k(SpaceForm::Flat, 7.0) == 1.0);
  // cosh^2 - sinh^2 = 1
  for (double r : {0.1, 1.0, 3.0, 8.0}) {
    const double s = sin_k(SpaceForm::Hyperbolic, r);
    const double c = cos_k(SpaceForm::Hyperbolic, r);
    CHECK(c * c - s * s == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK_THROWS_AS(sin_k(SpaceForm::Flat, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(cos_k(SpaceForm::Hyperbolic, -1.0), std::invalid_argument);
}

TEST_CASE("sinh power integrals match adaptive quadrature") {
  for (int m = 1; m <= 5; ++m) {
    for (double r : {0.01, 0.1, 0.3, 1.0, 2.0, 5.0, 10.0}) {
      const double oracle = testutil::adaptive_simpson(
          [m](double t) { return std::pow(std::sinh(t), m); }, 0.0, r, 1e-14);
      const double val = sin_k_power_integral(SpaceForm::Hyperbolic, m, r);
      CHECK(val == doctest::Approx(oracle).epsilon(1e-12));
    }
  }
  // flat case is the monomial integral
  CHECK(sin_k_power_integral(SpaceForm::Flat, 3, 2.0) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("g closed forms and quadrature oracle") {
  RadialProfile flat2(SpaceForm::Flat, 2);
  CHECK(flat2.g(1.0) == doctest::Approx(0.5).epsilon(1e-15));

  RadialProfile hyp2(SpaceForm::Hyperbolic, 2);
  // (cosh r - 1)/sinh r = tanh(r/2); frozen value tanh(1)
  CHECK(hyp2.g(2.0) == doctest::Approx(0.7615941559557649).epsilon(1e-14));
  const double oracle22 = testutil::adaptive_simpson(
                              [](double t) { return std::sinh(t); }, 0.0, 2.0, 1e-14) /
                          std::sinh(2.0);
  CHECK(hyp2.g(2.0) == doctest::Approx(oracle22).epsilon(1e-13));

  RadialProfile hyp4(SpaceForm::Hyperbolic, 4);
  const double oracle41 = testutil::adaptive_simpson(
                              [](double t) { return std::pow(std::sinh(t), 3); }, 0.0, 1.0, 1e-14) /
                          std::pow(std::sinh(1.0), 3);
  CHECK(hyp4.g(1.0) == doctest::Approx(oracle41).epsilon(1e-12));
  CHECK(hyp4.g(1.0) == doctest::Approx(0.21461088420196886).epsilon(1e-13));

  CHECK_THROWS_AS(hyp2.g(0.0), std::invalid_argument);
  CHECK_THROWS_AS(hyp2.g(-1.0), std::invalid_argument);
}

TEST_CASE("g_prime closed forms and finite-difference oracle") {
  RadialProfile flat3(SpaceForm::Flat, 3);
  CHECK(flat3.g_prime(5.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  RadialProfile hyp2(SpaceForm::Hyperbolic, 2);
  const double sech1 = 1.0 / std::cosh(1.0);
  CHECK(hyp2.g_prime(2.0) == doctest::Approx(0.5 * sech1 * sech1).epsilon(1e-14));
  CHECK(hyp2.g_prime(2.0) == doctest::Approx(0.20998717080701303).epsilon(1e-13));
  // small-r limit g' -> 1/n
  CHECK(hyp2.g_prime(1e-6) == doctest::Approx(0.5).epsilon(1e-9));

  for (int n = 2; n <= 6; ++n) {
    RadialProfile p(SpaceForm::Hyperbolic, n);
    for (double r : {0.05, 0.3, 1.0, 2.5, 5.0}) {
      const double fd = testutil::central_diff([&](double x) { return p.g(x); }, r, 1e-3);
      CHECK(p.g_prime(r) == doctest::Approx(fd).epsilon(1e-8));
    }
  }
}

TEST_CASE("profile F values and monotonicity") {
  RadialProfile flat2(SpaceForm::Flat, 2);
  CHECK(flat2.F(0.37) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(flat2.F(4.2) == doctest::Approx(0.5).epsilon(1e-15));

  RadialProfile hyp2(SpaceForm::Hyperbolic, 2);
  // F = 0.5 sech^4(r/2); value also recovered by composing g and g'
  const double sech1 = 1.0 / std::cosh(1.0);
  CHECK(hyp2.F(2.0) == doctest::Approx(0.5 * std::pow(sech1, 4)).epsilon(1e-13));
  CHECK(hyp2.F(2.0) == doctest::Approx(0.08818922380706733).epsilon(1e-13));
  const double gp = hyp2.g_prime(2.0), qq = hyp2.g(2.0) / std::sinh(2.0);
  CHECK(hyp2.F(2.0) == doctest::Approx(gp * gp + qq * qq).epsilon(1e-14));

  RadialProfile hyp3(SpaceForm::Hyperbolic, 3);
  CHECK(hyp3.F(1.0) >= hyp3.F(2.0));
}

TEST_CASE("property-g grid: positivity, g' sin_k <= g, F non-increasing") {
  const auto grid = log_grid(1e-4, 10.0, 400);
  for (SpaceForm space : {SpaceForm::Flat, SpaceForm::Hyperbolic}) {
    for (int n = 2; n <= 6; ++n) {
      RadialProfile p(space, n);
      double prev_F = 0.0;
      for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = grid[i];
        const double g = p.g(r);
        const double gp = p.g_prime(r);
        CHECK(g > 0.0);
        CHECK(gp > 0.0);
        CHECK(gp * sin_k(space, r) <= g * (1.0 + 1e-12));
        const double F = p.F(r);
        if (i > 0) CHECK(F <= prev_F * (1.0 + 1e-12));
        prev_F = F;
      }
    }
  }
}

TEST_CASE("mu1_ball: flat remark, hyperbolic closed form, Rayleigh agreement") {
  CHECK(mu1_ball(SpaceForm::Flat, 5, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(mu1_ball(SpaceForm::Flat, 2, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mu1_ball(SpaceForm::Hyperbolic, 2, 1.0) ==
        doctest::Approx(1.0 / std::sinh(1.0)).epsilon(1e-13));
  CHECK(mu1_ball(SpaceForm::Hyperbolic, 2, 1.0) ==
        doctest::Approx(0.8509181282393215).epsilon(1e-13));
  CHECK(mu1_ball(SpaceForm::Hyperbolic, 3, 1.0) ==
        doctest::Approx(0.7696672289507643).epsilon(1e-12));

  for (SpaceForm space : {SpaceForm::Flat, SpaceForm::Hyperbolic}) {
    for (int n = 2; n <= 6; ++n) {
      for (double R : {0.5, 1.0, 2.0, 4.0}) {
        const double bc = mu1_ball(space, n, R);
        const double ray = mu1_ball_rayleigh(space, n, R);
        CHECK(std::abs(bc - ray) < 1e-10 * std::abs(bc));
      }
    }
  }
}

TEST_CASE("ball volumes and sphere areas") {
  CHECK(ball_volume(SpaceForm::Flat, 2, 1.0) == doctest::Approx(M_PI).epsilon(1e-14));
  CHECK(ball_volume(SpaceForm::Flat, 3, 2.0) == doctest::Approx(32.0 * M_PI / 3.0).epsilon(1e-14));
  // 2 pi (cosh 1 - 1), also by quadrature oracle
  const double oracle = 2.0 * M_PI *
                        testutil::adaptive_simpson([](double t) { return std::sinh(t); }, 0.0, 1.0,
                                                   1e-14);
  CHECK(ball_volume(SpaceForm::Hyperbolic, 2, 1.0) == doctest::Approx(oracle).epsilon(1e-13));
  CHECK(ball_volume(SpaceForm::Hyperbolic, 2, 1.0) ==
        doctest::Approx(3.4122762652849023).epsilon(1e-14));

  CHECK(sphere_area(SpaceForm::Flat, 2, 2.0) == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
  CHECK(sphere_area(SpaceForm::Hyperbolic, 2, 1.0) ==
        doctest::Approx(2.0 * M_PI * std::sinh(1.0)).epsilon(1e-14));
  CHECK(sphere_area(SpaceForm::Flat, 4, 1.0) == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-14));
}

TEST_CASE("radius_from_volume inverts ball_volume") {
  CHECK(radius_from_volume(SpaceForm::Flat, 2, M_PI) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(radius_from_volume(SpaceForm::Flat, 3, 32.0 * M_PI / 3.0) ==
        doctest::Approx(2.0).epsilon(1e-13));
  CHECK(radius_from_volume(SpaceForm::Hyperbolic, 2, 2.0 * M_PI * (std::cosh(1.0) - 1.0)) ==
        doctest::Approx(1.0).epsilon(1e-13));
  for (SpaceForm space : {SpaceForm::Flat, SpaceForm::Hyperbolic}) {
    for (int n = 2; n <= 6; ++n) {
      for (double R : {0.3, 1.0, 2.7, 6.0}) {
        const double V = ball_volume(space, n, R);
        const double Rback = radius_from_volume(space, n, V);
        CHECK(Rback == doctest::Approx(R).epsilon(1e-10));
        CHECK(std::abs(ball_volume(space, n, Rback) - V) < 1e-12 * V);
      }
    }
  }
}

TEST_CASE("ball spectrum record") {
  const BallSpectrum b = ball_spectrum(SpaceForm::Hyperbolic, 4, 1.5);
  CHECK(b.multiplicity == 4);
  CHECK(b.mu1 == doctest::Approx(mu1_ball(SpaceForm::Hyperbolic, 4, 1.5)).epsilon(1e-15));
  CHECK(b.radius == 1.5);
}

TEST_CASE("harmonic_sum_ball") {
  CHECK(harmonic_sum_ball(SpaceForm::Flat, 2, 3.0) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(harmonic_sum_ball(SpaceForm::Hyperbolic, 2, 1.0) ==
        doctest::Approx(std::sinh(1.0)).epsilon(1e-13));
  CHECK(harmonic_sum_ball(SpaceForm::Hyperbolic, 4, 1.0) ==
        doctest::Approx(3.0 / mu1_ball(SpaceForm::Hyperbolic, 4, 1.0)).epsilon(1e-14));
}

TEST_CASE("unit sphere areas") {
  CHECK(unit_sphere_area(2) == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
  CHECK(unit_sphere_area(3) == doctest::Approx(4.0 * M_PI).epsilon(1e-15));
  CHECK(unit_sphere_area(4) == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-15));
  CHECK(unit_sphere_area(6) == doctest::Approx(M_PI * M_PI * M_PI).epsilon(1e-15));
}
