#include "steklov/radial.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "steklov/quadrature.hpp"

namespace steklov {

namespace {

// Below this radius the hyperbolic recurrence for J_m cancels; use series.
constexpr double kSeriesSwitch = 0.25;
// Below this radius g, g', F use their small-r expansions directly.
constexpr double kSmallR = 1e-5;

void require_dim(int n) {
  if (n < 2) throw std::invalid_argument("radial: dimension must be >= 2");
}

void require_positive_r(double r, const char* who) {
  if (!(r > 0.0)) throw std::invalid_argument(std::string(who) + ": r must be > 0");
}

// Coefficients s_j of (sinh t / t)^m = sum_j s_j t^{2j}, by repeated
// multiplication of the sinh t / t series.  24 terms keep the truncation
// below 1e-20 for r < 1/4 and the m in practical use.
std::vector<double> sinhc_power_series(int m) {
  constexpr int kTerms = 24;
  std::vector<double> base(kTerms, 0.0);
  double fact = 1.0;  // (2j+1)!
  for (int j = 0; j < kTerms; ++j) {
    base[j] = 1.0 / fact;
    fact *= (2.0 * j + 2.0) * (2.0 * j + 3.0);
  }
  std::vector<double> out(kTerms, 0.0);
  out[0] = 1.0;
  for (int p = 0; p < m; ++p) {
    std::vector<double> next(kTerms, 0.0);
    for (int i = 0; i < kTerms; ++i)
      for (int j = 0; i + j < kTerms; ++j) next[i + j] += out[i] * base[j];
    out = std::move(next);
  }
  return out;
}

// J_m(r) = int_0^r sinh^m t dt for r < kSeriesSwitch, term-by-term from the
// sinh^m series.
double sinh_integral_series(int m, double r) {
  const std::vector<double> s = sinhc_power_series(m);
  const double r2 = r * r;
  double pow_r = std::pow(r, m + 1);
  double acc = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    acc += s[j] * pow_r / (m + 1.0 + 2.0 * j);
    pow_r *= r2;
  }
  return acc;
}

double sinh_integral(int m, double r) {
  if (r < kSeriesSwitch) return sinh_integral_series(m, r);
  const double sh = std::sinh(r);
  const double ch = std::cosh(r);
  // J_0, J_1; cosh r - 1 written as 2 sinh^2(r/2) to keep relative accuracy.
  double jm2 = r;
  const double sh_half = std::sinh(0.5 * r);
  double jm1 = 2.0 * sh_half * sh_half;
  if (m == 0) return jm2;
  if (m == 1) return jm1;
  double j = 0.0;
  for (int k = 2; k <= m; ++k) {
    j = (std::pow(sh, k - 1) * ch - (k - 1) * jm2) / k;
    jm2 = jm1;
    jm1 = j;
  }
  return j;
}

}  // namespace

double sin_k_power_integral(SpaceForm space, int m, double r) {
  if (m < 0) throw std::invalid_argument("sin_k_power_integral: m must be >= 0");
  if (r < 0.0) throw std::invalid_argument("sin_k_power_integral: r must be >= 0");
  if (space == SpaceForm::Flat) return std::pow(r, m + 1) / (m + 1.0);
  return sinh_integral(m, r);
}

RadialProfile::RadialProfile(SpaceForm space, int dim) : space_(space), dim_(dim) {
  require_dim(dim);
}

double RadialProfile::g(double r) const {
  require_positive_r(r, "g");
  const double n = dim_;
  if (space_ == SpaceForm::Flat) return r / n;
  if (r < kSmallR) {
    // g = r/n - (n-1) r^3 / (3 n (n+2)) + O(r^5)
    return r / n - (n - 1.0) * r * r * r / (3.0 * n * (n + 2.0));
  }
  return sinh_integral(dim_ - 1, r) / std::pow(std::sinh(r), dim_ - 1);
}

double RadialProfile::g_prime(double r) const {
  require_positive_r(r, "g_prime");
  const double n = dim_;
  if (space_ == SpaceForm::Flat) return 1.0 / n;
  if (r < kSmallR) {
    // g' = 1/n - (n-1) r^2 / (n (n+2)) + O(r^4)
    return 1.0 / n - (n - 1.0) * r * r / (n * (n + 2.0));
  }
  return 1.0 - (n - 1.0) * g(r) * std::cosh(r) / std::sinh(r);
}

double RadialProfile::g_over_sin_k(double r) const {
  require_positive_r(r, "g_over_sin_k");
  if (space_ == SpaceForm::Flat) return 1.0 / dim_;
  return g(r) / std::sinh(r);
}

double RadialProfile::g_over_r(double r) const {
  require_positive_r(r, "g_over_r");
  const double n = dim_;
  if (space_ == SpaceForm::Flat) return 1.0 / n;
  if (r < kSmallR) return 1.0 / n - (n - 1.0) * r * r / (3.0 * n * (n + 2.0));
  return g(r) / r;
}

double RadialProfile::F(double r) const {
  require_positive_r(r, "F");
  if (space_ == SpaceForm::Flat) return 1.0 / dim_;
  const double gp = g_prime(r);
  const double q = g_over_sin_k(r);
  return gp * gp + (dim_ - 1.0) * q * q;
}

double unit_sphere_area(int n) {
  require_dim(n);
  // Gamma(n/2) by recursion from Gamma(1) = 1 and Gamma(1/2) = sqrt(pi).
  double gamma = (n % 2 == 0) ? 1.0 : std::sqrt(M_PI);
  double x = (n % 2 == 0) ? 1.0 : 0.5;
  while (x < n / 2.0 - 0.25) {
    gamma *= x;
    x += 1.0;
  }
  return 2.0 * std::pow(M_PI, n / 2.0) / gamma;
}

double mu1_ball_rayleigh(SpaceForm space, int n, double R) {
  require_dim(n);
  require_positive_r(R, "mu1_ball_rayleigh");
  RadialProfile profile(space, n);
  const double num = integrate(
      [&](double r) { return profile.F(r) * std::pow(sin_k(space, r), n - 1); }, 0.0, R);
  const double gR = profile.g(R);
  return num / (gR * gR * std::pow(sin_k(space, R), n - 1));
}

BallSpectrum ball_spectrum(SpaceForm space, int n, double R) {
  return {space, n, R, mu1_ball(space, n, R), n};
}

double mu1_ball(SpaceForm space, int n, double R) {
  require_dim(n);
  require_positive_r(R, "mu1_ball");
  RadialProfile profile(space, n);
  const double mu = profile.g_prime(R) / profile.g(R);
  const double ray = mu1_ball_rayleigh(space, n, R);
  if (std::abs(ray - mu) > 1e-8 * std::abs(mu))
    throw std::runtime_error("mu1_ball: boundary-condition and Rayleigh-integral forms disagree");
  return mu;
}

double ball_volume(SpaceForm space, int n, double R) {
  require_dim(n);
  require_positive_r(R, "ball_volume");
  return unit_sphere_area(n) * sin_k_power_integral(space, n - 1, R);
}

double sphere_area(SpaceForm space, int n, double R) {
  require_dim(n);
  require_positive_r(R, "sphere_area");
  return unit_sphere_area(n) * std::pow(sin_k(space, R), n - 1);
}

double radius_from_volume(SpaceForm space, int n, double V) {
  require_dim(n);
  if (!(V > 0.0)) throw std::invalid_argument("radius_from_volume: V must be > 0");
  // Flat closed form as the initial guess; volume is strictly increasing in R,
  // so double the upper end until it brackets.
  double r = std::pow(n * V / unit_sphere_area(n), 1.0 / n);
  double lo = 0.0, hi = r;
  while (ball_volume(space, n, hi) < V) {
    lo = hi;
    hi *= 2.0;
  }
  r = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = ball_volume(space, n, r) - V;
    if (f > 0.0) hi = r; else lo = r;
    const double step = f / sphere_area(space, n, r);
    double next = r - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(f) <= 1e-13 * V && std::abs(next - r) <= 1e-14 * r) return r;
    r = next;
  }
  return r;
}

double harmonic_sum_ball(SpaceForm space, int n, double R) {
  require_dim(n);
  require_positive_r(R, "harmonic_sum_ball");
  if (space == SpaceForm::Flat) return n * R;
  return (n - 1.0) / mu1_ball(space, n, R);
}

}  // namespace steklov
