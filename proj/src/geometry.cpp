#include "steklov/geometry.hpp"

#include <stdexcept>

namespace steklov {

namespace {

struct Ambient {
  double t = 0.0, x = 0.0, y = 0.0;  // Minkowski signature (-, +, +)
};

Ambient lift(const Point& p) { return {p.x0(), p.x, p.y}; }

double minkowski(const Ambient& a, const Ambient& b) {
  return -a.t * b.t + a.x * b.x + a.y * b.y;
}

Ambient axpy(double c, const Ambient& a, const Ambient& b) {
  return {c * a.t + b.t, c * a.x + b.x, c * a.y + b.y};
}

// Orthonormal frame at p obtained by parallel transport of the pole frame
// {(0,1,0), (0,0,1)} along the geodesic from the pole.  The unit tangent at
// the pole toward p is (0, p.x, p.y)/rho, rho = sinh(d); a transported basis
// vector keeps its component orthogonal to the geodesic plane and rotates the
// radial component into (sinh d, cosh d * u).
void pole_frame(const Point& p, Ambient& e1, Ambient& e2) {
  const double rho = std::hypot(p.x, p.y);
  if (rho < 1e-300) {
    e1 = {0.0, 1.0, 0.0};
    e2 = {0.0, 0.0, 1.0};
    return;
  }
  const double ux = p.x / rho, uy = p.y / rho;
  const double c = p.x0();  // cosh d
  const double s = rho;     // sinh d
  // transported radial direction (sinh d, cosh d * u) and unchanged
  // tangential direction (-uy, ux)
  e1 = {s * ux, ux * (c * ux) + uy * uy, ux * (c * uy) - uy * ux};
  e2 = {s * uy, uy * (c * ux) - ux * uy, uy * (c * uy) + ux * ux};
}

void require_same_space(const Point& p, const Point& q, const char* who) {
  if (p.space != q.space) throw std::invalid_argument(std::string(who) + ": mixed space forms");
}

}  // namespace

Point pole(SpaceForm space) { return {space, 0.0, 0.0}; }

double distance(const Point& p, const Point& q) {
  require_same_space(p, q, "distance");
  if (p.space == SpaceForm::Flat) return std::hypot(q.x - p.x, q.y - p.y);
  const double dt = q.x0() - p.x0();
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  const double dd = std::max(0.0, -dt * dt + dx * dx + dy * dy);
  return 2.0 * std::asinh(0.5 * std::sqrt(dd));
}

Point exp_map(const Point& p, const TangentVector& v) {
  require_same_space(p, v.base, "exp_map");
  if (p.space == SpaceForm::Flat) return {p.space, p.x + v.vx, p.y + v.vy};
  const double t = v.norm();
  if (t < 1e-300) return p;
  Ambient e1, e2;
  pole_frame(p, e1, e2);
  const double ax = (v.vx * e1.x + v.vy * e2.x) / t;
  const double ay = (v.vx * e1.y + v.vy * e2.y) / t;
  const Ambient P = lift(p);
  const double c = std::cosh(t), s = std::sinh(t);
  return {p.space, c * P.x + s * ax, c * P.y + s * ay};
}

TangentVector log_map(const Point& p, const Point& q) {
  require_same_space(p, q, "log_map");
  if (p.space == SpaceForm::Flat) return {p, q.x - p.x, q.y - p.y};
  const double d = distance(p, q);
  if (d == 0.0) return {p, 0.0, 0.0};
  const Ambient P = lift(p), Q = lift(q);
  // u = (Q - cosh d * P)/sinh d, written via Q - P to avoid cancellation:
  // Q - cosh d P = (Q - P) - 2 sinh^2(d/2) P.
  const double sh = std::sinh(d);
  const double shh = std::sinh(0.5 * d);
  Ambient u = {Q.t - P.t, Q.x - P.x, Q.y - P.y};
  u = axpy(-2.0 * shh * shh, P, u);
  u = {u.t / sh, u.x / sh, u.y / sh};
  Ambient e1, e2;
  pole_frame(p, e1, e2);
  return {p, d * minkowski(u, e1), d * minkowski(u, e2)};
}

NormalCoords normal_coordinates(const Point& p, const Point& q) {
  const TangentVector v = log_map(p, q);
  return {v.vx, v.vy, distance(p, q)};
}

std::array<double, 2> chart_coords(const Point& p) {
  if (p.space == SpaceForm::Flat) return {p.x, p.y};
  const double denom = 1.0 + p.x0();
  return {p.x / denom, p.y / denom};
}

double chart_boundary_weight(SpaceForm space, const std::array<double, 2>& z) {
  if (space == SpaceForm::Flat) return 1.0;
  return 2.0 / (1.0 - z[0] * z[0] - z[1] * z[1]);
}

}  // namespace steklov
