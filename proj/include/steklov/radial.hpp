#pragma once

#include "steklov/space_form.hpp"

namespace steklov {

// int_0^r sin_k^m t dt, m >= 0.  Hyperbolic case uses the exact reduction
// recurrence J_m = (sinh^{m-1} r cosh r - (m-1) J_{m-2}) / m with
// J_0 = r, J_1 = cosh r - 1; below r = 1/4 a power series replaces the
// recurrence, which loses digits to cancellation there.
double sin_k_power_integral(SpaceForm space, int m, double r);

// Radial factor of the first Steklov eigenfunction on a geodesic ball,
//   g(r) = sin_k^{1-n}(r) * int_0^r sin_k^{n-1} t dt,
// with g' = 1 - (n-1) g cos_k/sin_k and the profile
//   F = (g')^2 + (n-1) g^2 / sin_k^2.
// In the flat case g = r/n, g' = 1/n and F = 1/n exactly.
class RadialProfile {
 public:
  RadialProfile(SpaceForm space, int dim);

  SpaceForm space() const { return space_; }
  int dim() const { return dim_; }

  double g(double r) const;
  double g_prime(double r) const;
  double F(double r) const;

  // g(r)/sin_k(r); stable down to r -> 0 where it tends to 1/n.
  double g_over_sin_k(double r) const;

  // g(r)/r; stable down to r -> 0 where it tends to 1/n.
  double g_over_r(double r) const;

 private:
  SpaceForm space_;
  int dim_;
};

// Area of the unit (n-1)-sphere, 2 pi^{n/2} / Gamma(n/2); Gamma evaluated by
// integer/half-integer recursion from Gamma(1) = 1, Gamma(1/2) = sqrt(pi).
double unit_sphere_area(int n);

// Steklov data of a geodesic ball: mu_1 = ... = mu_n = g'(R)/g(R).
struct BallSpectrum {
  SpaceForm space;
  int dim = 2;
  double radius = 1.0;
  double mu1 = 0.0;
  int multiplicity = 0;  // = dim
};

BallSpectrum ball_spectrum(SpaceForm space, int n, double R);

// First nonzero Steklov eigenvalue of the geodesic ball B(R), with
// multiplicity n: mu_1 = g'(R)/g(R).  The Rayleigh-integral form is evaluated
// alongside and must agree to 1e-8 relative; disagreement throws.
double mu1_ball(SpaceForm space, int n, double R);

// Rayleigh-quotient form of the same eigenvalue,
//   int_0^R F(r) sin_k^{n-1} r dr / (g(R)^2 sin_k^{n-1} R),
// by Gauss-Legendre quadrature.
double mu1_ball_rayleigh(SpaceForm space, int n, double R);

// vol(B(R)) and vol(S(R)).
double ball_volume(SpaceForm space, int n, double R);
double sphere_area(SpaceForm space, int n, double R);

// The unique R > 0 with ball_volume(space, n, R) = V;
// residual |ball_volume(R) - V| / V < 1e-12.
double radius_from_volume(SpaceForm space, int n, double V);

// Right-hand side of the main inequalities: sum of reciprocals of the first
// n-1 (hyperbolic) resp. n (flat) nonzero ball eigenvalues, i.e.
// (n-1)/mu_1(B(R)) resp. n R.
double harmonic_sum_ball(SpaceForm space, int n, double R);

}  // namespace steklov
