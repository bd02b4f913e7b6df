#include "steklov/constructions.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "steklov/quadrature.hpp"

namespace steklov {

namespace {

struct Moment {
  double m1 = 0.0, m2 = 0.0;
  double scale = 0.0;  // int_{dOmega} g(r) dA, the residual normalizer
  double norm() const { return std::hypot(m1, m2); }
};

Moment boundary_moment(const BoundaryQuadrature& quad, const RadialProfile& profile,
                       const Point& p) {
  Moment m;
  for (const auto& node : quad.nodes) {
    const NormalCoords nc = normal_coordinates(p, node.point);
    if (nc.r == 0.0) continue;  // x_i/r has a removable zero there
    const double G = profile.g_over_r(nc.r);
    m.m1 += node.weight * G * nc.x1;
    m.m2 += node.weight * G * nc.x2;
    m.scale += node.weight * profile.g(nc.r);
  }
  return m;
}

Point riemannian_mean(const BoundaryQuadrature& quad) {
  Point p = quad.nodes.front().point;
  for (int it = 0; it < 100; ++it) {
    double vx = 0.0, vy = 0.0;
    for (const auto& node : quad.nodes) {
      const TangentVector v = log_map(p, node.point);
      vx += node.weight * v.vx;
      vy += node.weight * v.vy;
    }
    vx /= quad.total_length;
    vy /= quad.total_length;
    p = exp_map(p, {p, vx, vy});
    if (std::hypot(vx, vy) < 1e-14) break;
  }
  return p;
}

struct NewtonResult {
  Point point;
  Moment residual;
  int iterations = 0;
  bool converged = false;
};

NewtonResult newton_moment_root(const BoundaryQuadrature& quad, const RadialProfile& profile,
                                Point p, double diameter, int max_iter) {
  const double h = 1e-6 * diameter;
  Moment m = boundary_moment(quad, profile, p);
  NewtonResult res;
  for (int it = 0; it < max_iter; ++it) {
    if (m.norm() <= 5e-13 * m.scale) {
      res = {p, m, it, true};
      return res;
    }
    // forward-difference Jacobian of the moment map in the frame at p
    const Moment mx = boundary_moment(quad, profile, exp_map(p, {p, h, 0.0}));
    const Moment my = boundary_moment(quad, profile, exp_map(p, {p, 0.0, h}));
    const double j11 = (mx.m1 - m.m1) / h, j21 = (mx.m2 - m.m2) / h;
    const double j12 = (my.m1 - m.m1) / h, j22 = (my.m2 - m.m2) / h;
    const double det = j11 * j22 - j12 * j21;
    double dx, dy;
    if (std::abs(det) > 1e-300) {
      dx = -(j22 * m.m1 - j12 * m.m2) / det;
      dy = -(-j21 * m.m1 + j11 * m.m2) / det;
    } else {
      dx = -m.m1;
      dy = -m.m2;
    }
    // damped update
    double lambda = 1.0;
    while (lambda > 1e-4) {
      const Point trial = exp_map(p, {p, lambda * dx, lambda * dy});
      const Moment mt = boundary_moment(quad, profile, trial);
      if (mt.norm() < m.norm() * (1.0 - 1e-4 * lambda) || mt.norm() <= 5e-13 * mt.scale) {
        p = trial;
        m = mt;
        break;
      }
      lambda *= 0.5;
    }
    if (lambda <= 1e-4) break;  // stagnated
  }
  res = {p, m, max_iter, m.norm() <= 5e-13 * m.scale};
  return res;
}

double rotated_component(const NormalCoords& nc, double angle, int axis) {
  const double c = std::cos(angle), s = std::sin(angle);
  return axis == 1 ? c * nc.x1 + s * nc.x2 : -s * nc.x1 + c * nc.x2;
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

CertificateReport make_report(std::string name, const CertificateContext& ctx, double lhs,
                              double rhs, double tol) {
  CertificateReport rep;
  rep.name = std::move(name);
  rep.context = ctx.descriptor;
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.gap = lhs - rhs;
  rep.tol = tol * ctx.tol_multiplier;
  rep.pass = rep.gap >= -rep.tol;
  return rep;
}

// 2 (err_i / mu_i^2) summed over the eigenvalues entering a 1/mu sum, plus a
// small absolute floor: the certificate tolerance of the design contract.
double reciprocal_sum_tol(const CertificateContext& ctx, int first, int last) {
  double t = 1e-8;
  for (int i = first; i <= last; ++i) {
    const double mu = ctx.fem.spectrum.eigenvalues[i];
    t += 2.0 * ctx.fem.error_estimate[i] / (mu * mu);
  }
  return t;
}

}  // namespace

CenterOfMass center_of_mass(const StarDomain& domain, const RadialProfile& profile) {
  if (profile.dim() != 2)
    throw std::invalid_argument("center_of_mass: profile dimension must be 2");
  if (profile.space() != domain.space())
    throw std::invalid_argument("center_of_mass: profile/domain space forms differ");

  const BoundaryQuadrature quad = boundary_quadrature(domain);
  const Point mean = riemannian_mean(quad);
  const double diameter = 2.0 * domain.max_radius();

  const NewtonResult main = newton_moment_root(quad, profile, mean, diameter, 200);
  if (!main.converged) {
    throw std::runtime_error("center_of_mass: no convergence after 200 iterations, |residual| = " +
                             format_g17(main.residual.norm()));
  }
  if (!(distance(main.point, mean) < domain.max_radius()))
    throw std::runtime_error("center_of_mass: root escaped the boundary hull");

  CenterOfMass out;
  out.point = main.point;
  out.residual = {main.residual.m1, main.residual.m2};
  out.iterations = main.iterations;

  // probe for second roots from perturbed starts
  const double rad = 0.3 * domain.max_radius();
  for (int k = 0; k < 8; ++k) {
    const double phi = k * M_PI / 4.0;
    const Point start = exp_map(mean, {mean, rad * std::cos(phi), rad * std::sin(phi)});
    const NewtonResult probe = newton_moment_root(quad, profile, start, diameter, 120);
    if (probe.converged && distance(probe.point, main.point) > 1e-6 * diameter) {
      out.ambiguous = true;
      break;
    }
  }
  return out;
}

BoundaryTrace boundary_trace(const RefinedSpectrum& fem, int eig_index) {
  if (eig_index < 0 || eig_index >= fem.spectrum.boundary_eigenvectors.cols())
    throw std::invalid_argument("boundary_trace: eigenvector index out of range");
  BoundaryTrace trace;
  trace.points.reserve(fem.mesh.boundary_loop.size());
  for (int id : fem.mesh.boundary_loop) trace.points.push_back(fem.mesh.vertices[id]);
  trace.values = fem.spectrum.boundary_eigenvectors.col(eig_index);
  trace.mass = fem.boundary_mass;
  return trace;
}

TestFunctionFrame align_rotation(const StarDomain& domain, const Point& p,
                                 const BoundaryTrace& u1) {
  const int nb = static_cast<int>(u1.points.size());
  const RadialProfile profile(domain.space(), 2);
  Eigen::VectorXd f1(nb), f2(nb);
  for (int j = 0; j < nb; ++j) {
    const NormalCoords nc = normal_coordinates(p, u1.points[j]);
    const double G = nc.r == 0.0 ? 0.0 : profile.g_over_r(nc.r);
    f1[j] = G * nc.x1;
    f2[j] = G * nc.x2;
  }
  const Eigen::VectorXd Mu1 = u1.mass * u1.values;
  const double I1 = f1.dot(Mu1);
  const double I2 = f2.dot(Mu1);
  const double scale = std::sqrt(f1.dot(u1.mass * f1) + f2.dot(u1.mass * f2));

  TestFunctionFrame frame;
  frame.center = p;
  auto h = [&](double alpha) { return std::cos(alpha) * I2 - std::sin(alpha) * I1; };

  if (std::hypot(I1, I2) < 1e-10 * scale) {
    frame.degenerate = true;
    frame.angle = 0.0;
  } else if (h(0.0) == 0.0) {
    frame.angle = 0.0;
  } else {
    // h(alpha + pi) = -h(alpha), so [0, pi] brackets a sign change
    double lo = 0.0, hi = M_PI;
    const double hlo = h(lo);
    for (int it = 0; it < 90; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (h(mid) * hlo > 0.0) lo = mid; else hi = mid;
    }
    frame.angle = 0.5 * (lo + hi);
    if (frame.angle >= M_PI) frame.angle = 0.0;
  }

  const BoundaryQuadrature quad = boundary_quadrature(domain);
  const Moment m = boundary_moment(quad, profile, p);
  frame.orthogonality_residuals = {rotated_component({m.m1, m.m2, 0.0}, frame.angle, 1),
                                   rotated_component({m.m1, m.m2, 0.0}, frame.angle, 2),
                                   h(frame.angle)};
  return frame;
}

double grad_norm_sq_testfn(const RadialProfile& profile, double r, double xi) {
  if (!(r > 0.0)) throw std::invalid_argument("grad_norm_sq_testfn: r must be > 0");
  if (std::abs(xi) > r * (1.0 + 1e-12))
    throw std::invalid_argument("grad_norm_sq_testfn: |xi| must be <= r");
  const double ratio = std::min(1.0, (xi * xi) / (r * r));
  const double gp = profile.g_prime(r);
  const double q = profile.g_over_sin_k(r);
  return gp * gp * ratio + q * q * (1.0 - ratio);
}

std::pair<double, double> rayleigh_testfn(const StarDomain& domain,
                                          const TestFunctionFrame& frame,
                                          const RadialProfile& profile) {
  double num1 = 0.0, num2 = 0.0;
  for (const auto& node : interior_quadrature(domain)) {
    const NormalCoords nc = normal_coordinates(frame.center, node.point);
    if (nc.r == 0.0) {
      const double q0 = 1.0 / profile.dim();
      num1 += node.weight * q0 * q0;
      num2 += node.weight * q0 * q0;
      continue;
    }
    num1 += node.weight * grad_norm_sq_testfn(profile, nc.r, rotated_component(nc, frame.angle, 1));
    num2 += node.weight * grad_norm_sq_testfn(profile, nc.r, rotated_component(nc, frame.angle, 2));
  }
  double den1 = 0.0, den2 = 0.0;
  for (const auto& node : boundary_quadrature(domain).nodes) {
    const NormalCoords nc = normal_coordinates(frame.center, node.point);
    if (nc.r == 0.0) continue;
    const double G = profile.g_over_r(nc.r);
    const double t1 = G * rotated_component(nc, frame.angle, 1);
    const double t2 = G * rotated_component(nc, frame.angle, 2);
    den1 += node.weight * t1 * t1;
    den2 += node.weight * t2 * t2;
  }
  if (!(den1 > 1e-300) || !(den2 > 1e-300))
    throw std::runtime_error("rayleigh_testfn: boundary norm of a test function vanished");
  return {num1 / den1, num2 / den2};
}

CertificateContext prepare_certificates(const StarDomain& domain, int eigen_count, int levels,
                                        double tol_multiplier) {
  const int count = std::max(eigen_count, 3);
  CertificateContext ctx{domain,
                         RadialProfile(domain.space(), 2),
                         {},
                         solve_with_refinement(domain, count, levels),
                         {},
                         "",
                         tol_multiplier};
  ctx.com = center_of_mass(domain, ctx.profile);
  ctx.frame = align_rotation(domain, ctx.com.point, boundary_trace(ctx.fem, 1));
  return ctx;
}

CertificateReport check_boundary_g2(const CertificateContext& ctx) {
  double lhs = 0.0;
  for (const auto& node : boundary_quadrature(ctx.domain).nodes) {
    const double r = distance(ctx.com.point, node.point);
    const double g = ctx.profile.g(r);
    lhs += node.weight * g * g;
  }
  const double R = radius_from_volume(ctx.domain.space(), 2, domain_volume(ctx.domain));
  const double gR = ctx.profile.g(R);
  const double rhs = sphere_area(ctx.domain.space(), 2, R) * gR * gR;
  const double tol = 1e-8 * std::max(std::abs(lhs), std::abs(rhs)) + 1e-10;
  return make_report("boundary_g2", ctx, lhs, rhs, tol);
}

CertificateReport check_F_rearrangement(const CertificateContext& ctx) {
  const SpaceForm space = ctx.domain.space();
  const double R = radius_from_volume(space, 2, domain_volume(ctx.domain));
  const double lhs =
      2.0 * M_PI *
      integrate([&](double r) { return ctx.profile.F(r) * sin_k(space, r); }, 0.0, R);
  double rhs = 0.0;
  for (const auto& node : interior_quadrature(ctx.domain)) {
    const double r = distance(ctx.com.point, node.point);
    rhs += node.weight * (r == 0.0 ? 1.0 / ctx.profile.dim() : ctx.profile.F(r));
  }
  const double tol = 1e-8 * std::max(std::abs(lhs), std::abs(rhs)) + 1e-10;
  return make_report("F_rearrangement", ctx, lhs, rhs, tol);
}

CertificateReport check_theorem_hyperbolic(const CertificateContext& ctx) {
  if (ctx.domain.space() != SpaceForm::Hyperbolic)
    throw std::invalid_argument("check_theorem_hyperbolic: hyperbolic domains only");
  const double mu1 = ctx.fem.spectrum.eigenvalues[1];
  const double lhs = 1.0 / mu1;
  const double R = radius_from_volume(SpaceForm::Hyperbolic, 2, domain_volume(ctx.domain));
  const double rhs = 1.0 / mu1_ball(SpaceForm::Hyperbolic, 2, R);
  return make_report("theorem_hyperbolic", ctx, lhs, rhs, reciprocal_sum_tol(ctx, 1, 1));
}

CertificateReport check_theorem_euclidean(const CertificateContext& ctx) {
  if (ctx.domain.space() != SpaceForm::Flat)
    throw std::invalid_argument("check_theorem_euclidean: flat domains only");
  const double lhs =
      1.0 / ctx.fem.spectrum.eigenvalues[1] + 1.0 / ctx.fem.spectrum.eigenvalues[2];
  const double R = radius_from_volume(SpaceForm::Flat, 2, domain_volume(ctx.domain));
  return make_report("theorem_euclidean", ctx, lhs, 2.0 * R, reciprocal_sum_tol(ctx, 1, 2));
}

CertificateReport check_hersch_payne(const CertificateContext& ctx) {
  if (ctx.domain.space() != SpaceForm::Flat)
    throw std::invalid_argument("check_hersch_payne: flat domains only");
  const double lhs =
      1.0 / ctx.fem.spectrum.eigenvalues[1] + 1.0 / ctx.fem.spectrum.eigenvalues[2];
  const double rhs = boundary_quadrature(ctx.domain).total_length / M_PI;
  return make_report("hersch_payne", ctx, lhs, rhs, reciprocal_sum_tol(ctx, 1, 2));
}

CertificateReport check_sum1_chain(const CertificateContext& ctx) {
  double bg2 = 0.0;
  for (const auto& node : boundary_quadrature(ctx.domain).nodes) {
    const double r = distance(ctx.com.point, node.point);
    const double g = ctx.profile.g(r);
    bg2 += node.weight * g * g;
  }
  double int1 = 0.0, int2 = 0.0;
  for (const auto& node : interior_quadrature(ctx.domain)) {
    const NormalCoords nc = normal_coordinates(ctx.com.point, node.point);
    double q, gp, ratio1, ratio2;
    if (nc.r == 0.0) {
      q = gp = 1.0 / ctx.profile.dim();
      ratio1 = ratio2 = 0.5;
    } else {
      q = ctx.profile.g_over_sin_k(nc.r);
      gp = ctx.profile.g_prime(nc.r);
      const double x1 = rotated_component(nc, ctx.frame.angle, 1);
      ratio1 = std::min(1.0, x1 * x1 / (nc.r * nc.r));
      ratio2 = 1.0 - ratio1;
    }
    int1 += node.weight * (q * q + (gp * gp - q * q) * ratio1);
    int2 += node.weight * (q * q + (gp * gp - q * q) * ratio2);
  }
  const double mu1 = ctx.fem.spectrum.eigenvalues[1];
  const double mu2 = ctx.fem.spectrum.eigenvalues[2];
  const double lhs = int1 / mu1 + int2 / mu2;
  double tol = 1e-8 * (1.0 + std::abs(bg2));
  tol += 2.0 * ctx.fem.error_estimate[1] / (mu1 * mu1) * int1;
  tol += 2.0 * ctx.fem.error_estimate[2] / (mu2 * mu2) * int2;
  CertificateReport rep = make_report("sum1_chain", ctx, lhs, bg2, tol);
  rep.degenerate = ctx.frame.degenerate;
  return rep;
}

std::string CertificateReport::csv_row() const {
  return name + "," + context + "," + format_g17(lhs) + "," + format_g17(rhs) + "," +
         format_g17(gap) + "," + format_g17(tol) + "," + (pass ? "PASS" : "FAIL");
}

}  // namespace steklov
