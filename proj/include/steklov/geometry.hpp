#pragma once

#include <array>
#include <cmath>

#include "steklov/space_form.hpp"

namespace steklov {

// A point of R^2 (Cartesian) or H^2.  Hyperbolic points live on the
// hyperboloid sheet x0^2 = 1 + x1^2 + x2^2, x0 > 0; only (x1, x2) is stored,
// so the Minkowski constraint <P,P> = -1 holds by construction.
struct Point {
  SpaceForm space = SpaceForm::Flat;
  double x = 0.0;
  double y = 0.0;

  double x0() const { return std::sqrt(1.0 + x * x + y * y); }
};

// Tangent vector at `base`, components in the orthonormal frame there.
struct TangentVector {
  Point base;
  double vx = 0.0;
  double vy = 0.0;

  double norm() const { return std::hypot(vx, vy); }
};

struct NormalCoords {
  double x1 = 0.0;
  double x2 = 0.0;
  double r = 0.0;
};

// Origin of R^2, resp. the hyperboloid pole (1, 0, 0).
Point pole(SpaceForm space);

// Geodesic distance.  Hyperbolic distances use the Minkowski-difference form
// 2 asinh(|P - Q|_M / 2), which stays accurate for nearby points where
// acosh(-<P,Q>) cancels.
double distance(const Point& p, const Point& q);

// exp_p(v): p + v in the flat case; cosh|v| P + sinh|v| V on the hyperboloid,
// V the unit spacelike lift of v through the frame at p.
Point exp_map(const Point& p, const TangentVector& v);

// Inverse of exp_map: the v at p with exp_p(v) = q; zero vector when p = q.
TangentVector log_map(const Point& p, const Point& q);

// Components of log_map(p, q) in the frame at p, plus r = distance(p, q).
NormalCoords normal_coordinates(const Point& p, const Point& q);

// Poincare-disk coordinates z = (x1, x2)/(1 + x0) of a hyperbolic point.
// Flat points pass through unchanged (the FEM treats both uniformly).
std::array<double, 2> chart_coords(const Point& p);

// Conformal factor of the boundary measure in chart coordinates:
// 1 in the flat case, 2/(1 - |z|^2) in the Poincare disk.
double chart_boundary_weight(SpaceForm space, const std::array<double, 2>& z);

}  // namespace steklov
