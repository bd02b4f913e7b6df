#pragma once

#include <functional>
#include <string>
#include <vector>

#include "steklov/geometry.hpp"
#include "steklov/space_form.hpp"

namespace steklov {

// rho(theta) = c0 + sum_k (a[k-1] cos k theta + b[k-1] sin k theta).
struct FourierSeries {
  double c0 = 1.0;
  std::vector<double> a;
  std::vector<double> b;

  int degree() const { return static_cast<int>(std::max(a.size(), b.size())); }
  double eval(double theta) const;
  double deriv(double theta) const;
  double max_value() const;  // sup over a fine grid
  double min_value() const;
};

FourierSeries disk_series(double R);
FourierSeries perturbed_disk_series(double R0, double eps, int m);

// Boundary radius function of the ellipse x^2/a^2 + y^2/b^2 = 1, projected
// onto a cosine series.  Coefficients below 1e-13 of the mean are dropped and
// the degree is capped at max_degree (the tail decays geometrically, so the
// cap perturbs the shape only at the level of the dropped coefficients).
FourierSeries ellipse_series(double a, double b, int max_degree = 64);

// Star-shaped domain about `center`: boundary point at angle theta is
// exp_center(rho(theta) (cos theta, sin theta)) in the frame at center.
class StarDomain {
 public:
  StarDomain(SpaceForm space, Point center, FourierSeries rho);

  SpaceForm space() const { return space_; }
  const Point& center() const { return center_; }
  const FourierSeries& rho() const { return rho_; }

  double radius(double theta) const { return rho_.eval(theta); }
  double radius_deriv(double theta) const { return rho_.deriv(theta); }
  double max_radius() const { return rho_.max_value(); }
  Point boundary_point(double theta) const;

  // Rescales rho by s.
  void scale(double s);

 private:
  SpaceForm space_;
  Point center_;
  FourierSeries rho_;
};

struct BoundaryNode {
  double theta = 0.0;
  Point point;
  double weight = 0.0;  // arclength element * dtheta
};

struct BoundaryQuadrature {
  std::vector<BoundaryNode> nodes;
  double total_length = 0.0;
};

// Default node count: 8x the Fourier degree, floor 256.
int default_boundary_nodes(const StarDomain& domain);

// Uniform-theta trapezoid rule; spectrally accurate for smooth periodic rho.
BoundaryQuadrature boundary_quadrature(const StarDomain& domain, int node_count = 0);

double boundary_integral(const StarDomain& domain,
                         const std::function<double(const BoundaryNode&)>& f,
                         const BoundaryQuadrature& quad);

// vol(Omega): int rho^2/2 dtheta (flat) or int (cosh rho - 1) dtheta
// (hyperbolic), on the same theta rule as the boundary quadrature.
double domain_volume(const StarDomain& domain);

struct InteriorNode {
  Point point;
  double weight = 0.0;  // includes the sin_k(r) area element
};

// Gauss-Legendre in geodesic radius per ray, uniform trapezoid in theta.
std::vector<InteriorNode> interior_quadrature(const StarDomain& domain, int n_theta = 0);

// Rescales the domain so that domain_volume == target; returns the scale
// factor applied.
double normalize_to_volume(StarDomain& domain, double target);

}  // namespace steklov
