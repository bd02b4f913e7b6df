// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion.  Exits nonzero if any fails.

#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "steklov/constructions.hpp"
#include "steklov/harness.hpp"

using namespace steklov;

namespace {

int g_failures = 0;

void record(int id, const std::string& label, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", id, label.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

StarDomain flat_disk(double R = 1.0) {
  return {SpaceForm::Flat, pole(SpaceForm::Flat), disk_series(R)};
}

StarDomain hyperbolic_disk(double R = 1.0) {
  return {SpaceForm::Hyperbolic, pole(SpaceForm::Hyperbolic), disk_series(R)};
}

// ellipse of aspect a/b scaled to area pi
StarDomain unit_area_ellipse(double aspect) {
  StarDomain dom(SpaceForm::Flat, pole(SpaceForm::Flat),
                 ellipse_series(std::sqrt(aspect), 1.0 / std::sqrt(aspect), 32));
  normalize_to_volume(dom, M_PI);
  return dom;
}

StarDomain hyperbolic_bump(double eps, int m) {
  StarDomain dom(SpaceForm::Hyperbolic, pole(SpaceForm::Hyperbolic),
                 perturbed_disk_series(1.0, eps, m));
  normalize_to_volume(dom, ball_volume(SpaceForm::Hyperbolic, 2, 1.0));
  return dom;
}

double rel_err(double value, double target) { return std::abs(value - target) / std::abs(target); }

}  // namespace

int main() {
  // shared solves
  const RefinedSpectrum flat_ref = solve_with_refinement(flat_disk(), 5, 3, 0);

  std::vector<CertificateContext> flat_ctx;   // criterion 5 domains
  for (double aspect : {1.0, 1.5, 2.0, 3.0})
    flat_ctx.push_back(prepare_certificates(unit_area_ellipse(aspect), 3, 2));
  std::vector<CertificateContext> hyp_ctx;    // criterion 6 domains
  for (int m : {2, 3})
    for (double eps : {0.0, 0.1, 0.2})
      hyp_ctx.push_back(prepare_certificates(hyperbolic_bump(eps, m), 3, 3));

  {  // 1. Euclidean unit-disk spectrum at refinement level 2
    const auto& mu = flat_ref.spectrum.eigenvalues;
    const bool pass = std::abs(mu[0]) < 1e-8 && rel_err(mu[1], 1.0) < 5e-3 &&
                      rel_err(mu[2], 1.0) < 5e-3 && rel_err(mu[3], 2.0) < 1e-2 &&
                      rel_err(mu[4], 2.0) < 1e-2;
    record(1, "Euclidean unit-disk spectrum, level 2", pass,
           "mu0=" + fmt(mu[0]) + " err(mu1)=" + fmt(rel_err(mu[1], 1.0)) +
               " err(mu3)=" + fmt(rel_err(mu[3], 2.0)));
  }

  {  // 2. hyperbolic geodesic disk R = 1 at level 2
    const SteklovSpectrum spec =
        steklov_solve(assemble(mesh_star_domain(hyperbolic_disk(), 2)), 5);
    const double s1 = std::sinh(1.0);
    const double targets[4] = {1.0 / s1, 1.0 / s1, 2.0 / s1, 2.0 / s1};
    bool pass = true;
    double worst = 0.0;
    for (int k = 1; k <= 4; ++k) {
      worst = std::max(worst, rel_err(spec.eigenvalues[k], targets[k - 1]));
      pass = pass && rel_err(spec.eigenvalues[k], targets[k - 1]) < 1e-2;
    }
    pass = pass && rel_err(spec.eigenvalues[1], mu1_ball(SpaceForm::Hyperbolic, 2, 1.0)) < 1e-2;
    record(2, "hyperbolic geodesic disk spectrum vs k/sinh 1", pass, "worst rel err " + fmt(worst));
  }

  {  // 3. radial consistency of the two mu_1 formulas
    bool pass = true;
    double worst = 0.0;
    for (SpaceForm space : {SpaceForm::Flat, SpaceForm::Hyperbolic})
      for (int n = 2; n <= 6; ++n)
        for (double R : {0.5, 1.0, 2.0, 4.0}) {
          const double mu = mu1_ball(space, n, R);
          const double rel = std::abs(mu - mu1_ball_rayleigh(space, n, R)) / mu;
          worst = std::max(worst, rel);
          pass = pass && rel < 1e-10;
        }
    record(3, "g'(R)/g(R) vs Rayleigh-integral mu_1, rel 1e-10", pass, "worst " + fmt(worst));
  }

  {  // 4. property-g grid
    bool pass = true;
    double worst = -1.0;
    for (SpaceForm space : {SpaceForm::Flat, SpaceForm::Hyperbolic})
      for (int n = 2; n <= 6; ++n) {
        const RadialProfile p(space, n);
        double prevF = 0.0;
        for (int i = 0; i < 400; ++i) {
          const double r = 1e-4 * std::pow(10.0 / 1e-4, i / 399.0);
          const double g = p.g(r), gp = p.g_prime(r), F = p.F(r);
          pass = pass && gp > 0.0 && g > 0.0;
          pass = pass && gp * sin_k(space, r) <= g * (1.0 + 1e-12);
          worst = std::max(worst, gp * sin_k(space, r) / g - 1.0);
          if (i > 0) {
            pass = pass && F <= prevF * (1.0 + 1e-12);
            worst = std::max(worst, F / prevF - 1.0);
          }
          prevF = F;
        }
      }
    record(4, "property-g grid (400 radii, n = 2..6, both space forms)", pass,
           "worst slack " + fmt(worst));
  }

  {  // 5. Euclidean harmonic-sum bound on area-pi ellipses
    bool pass = true;
    double disk_gap = 0.0;
    for (std::size_t i = 0; i < flat_ctx.size(); ++i) {
      const CertificateReport rep = check_theorem_euclidean(flat_ctx[i]);
      pass = pass && rep.pass;
      if (i == 0) {
        disk_gap = std::abs(rep.gap) / rep.rhs;
        pass = pass && disk_gap < 1e-2;
      }
    }
    record(5, "Euclidean bound: 1/mu1 + 1/mu2 >= 2 on ellipses (aspect 1..3)", pass,
           "disk equality gap " + fmt(disk_gap));
  }

  {  // 6. hyperbolic harmonic-sum bound on volume-normalized domains
    bool pass = true;
    double eq_gap = 0.0;
    for (std::size_t i = 0; i < hyp_ctx.size(); ++i) {
      const CertificateReport rep = check_theorem_hyperbolic(hyp_ctx[i]);
      pass = pass && rep.pass;
      if (i % 3 == 0)  // the eps = 0 entries are exact geodesic disks
        eq_gap = std::max(eq_gap, std::abs(rep.gap) / rep.rhs);
    }
    pass = pass && eq_gap < 1e-2;
    record(6, "hyperbolic bound: 1/mu1 >= sinh R at matched volume", pass,
           "equality gap at eps=0: " + fmt(eq_gap));
  }

  {  // 7. boundary g^2 lower bound everywhere, equality on exact disks
    bool pass = true;
    double eq_gap = 0.0;
    for (const auto& ctx : flat_ctx) pass = pass && check_boundary_g2(ctx).pass;
    for (const auto& ctx : hyp_ctx) pass = pass && check_boundary_g2(ctx).pass;
    eq_gap = std::max(std::abs(check_boundary_g2(flat_ctx[0]).gap),
                      std::abs(check_boundary_g2(hyp_ctx[0]).gap));
    pass = pass && eq_gap < 1e-6;
    record(7, "int g^2 dA >= vol(S(R)) g(R)^2 on all domains", pass,
           "disk equality gap " + fmt(eq_gap));
  }

  {  // 8. F-rearrangement: pass everywhere, exact equality in the flat case
    bool pass = true;
    double flat_gap = 0.0;
    for (const auto& ctx : hyp_ctx) pass = pass && check_F_rearrangement(ctx).pass;
    for (const auto& ctx : flat_ctx) {
      const CertificateReport rep = check_F_rearrangement(ctx);
      pass = pass && rep.pass;
      flat_gap = std::max(flat_gap, std::abs(rep.gap) / std::max(1.0, std::abs(rep.lhs)));
    }
    pass = pass && flat_gap < 1e-10;
    record(8, "int_Omega F dV <= int_B(R) F dV; flat case exact", pass,
           "flat equality gap " + fmt(flat_gap));
  }

  {  // 9. gradient identity vs manifold finite differences
    bool pass = true;
    double worst = 0.0;
    std::mt19937 rng(20260809);
    for (const CertificateContext* ctx : {&flat_ctx[2], &flat_ctx[0], &hyp_ctx[4], &hyp_ctx[0]}) {
      const RadialProfile& prof = ctx->profile;
      const Point p = ctx->com.point;
      const double rmax = 0.5 * ctx->domain.rho().min_value();
      std::uniform_real_distribution<double> rad(0.05, rmax), ang(0.0, 2.0 * M_PI);
      auto phi = [&](const Point& z) {
        const NormalCoords nc = normal_coordinates(p, z);
        return nc.r == 0.0 ? 0.0 : prof.g_over_r(nc.r) * nc.x1;
      };
      for (int trial = 0; trial < 100; ++trial) {
        const double rr = rad(rng), aa = ang(rng);
        const Point q = exp_map(p, {p, rr * std::cos(aa), rr * std::sin(aa)});
        const double hstep = 1e-5;
        double grad_sq = 0.0;
        for (int axis = 0; axis < 2; ++axis) {
          const double ex = axis == 0 ? 1.0 : 0.0;
          const double fp = phi(exp_map(q, {q, hstep * ex, hstep * (1.0 - ex)}));
          const double fm = phi(exp_map(q, {q, -hstep * ex, -hstep * (1.0 - ex)}));
          grad_sq += (fp - fm) * (fp - fm) / (4.0 * hstep * hstep);
        }
        const NormalCoords nc = normal_coordinates(p, q);
        const double exact = grad_norm_sq_testfn(prof, nc.r, nc.x1);
        const double rel = std::abs(exact - grad_sq) / std::abs(grad_sq);
        worst = std::max(worst, rel);
        pass = pass && rel < 1e-6;
      }
    }
    record(9, "gradient identity vs manifold finite differences", pass, "worst rel " + fmt(worst));
  }

  {  // 10. center of mass: symmetry centers, equivariance, residuals
    bool pass = true;
    double worst_center = 0.0, worst_resid = 0.0;
    auto resid_norm = [](const CertificateContext& ctx) {
      double s = 0.0;
      for (const auto& node : boundary_quadrature(ctx.domain).nodes)
        s += node.weight * ctx.profile.g(distance(ctx.com.point, node.point));
      return std::hypot(ctx.com.residual[0], ctx.com.residual[1]) / s;
    };
    // symmetric domains: computed center at the pole
    for (const CertificateContext* ctx : {&flat_ctx[0], &flat_ctx[3], &hyp_ctx[0], &hyp_ctx[2]}) {
      worst_center = std::max(worst_center, distance(ctx->com.point, pole(ctx->domain.space())));
      worst_resid = std::max(worst_resid, resid_norm(*ctx));
    }
    pass = pass && worst_center < 1e-8 && worst_resid < 1e-10;
    // translated flat disk
    {
      const Point c{SpaceForm::Flat, 1.0, 2.0};
      const StarDomain dom(SpaceForm::Flat, c, disk_series(0.7));
      const CenterOfMass com = center_of_mass(dom, RadialProfile(SpaceForm::Flat, 2));
      pass = pass && distance(com.point, c) < 1e-8;
      worst_center = std::max(worst_center, distance(com.point, c));
    }
    // equivariance: flat translation and hyperbolic boost of an asymmetric domain
    {
      const FourierSeries rho{1.0, {0.0, 0.15}, {0.0, 0.0, 0.1}};
      const CenterOfMass base_f =
          center_of_mass({SpaceForm::Flat, pole(SpaceForm::Flat), rho},
                         RadialProfile(SpaceForm::Flat, 2));
      const Point shift{SpaceForm::Flat, 0.4, -1.1};
      const CenterOfMass moved_f =
          center_of_mass({SpaceForm::Flat, shift, rho}, RadialProfile(SpaceForm::Flat, 2));
      const double dev = std::hypot(moved_f.point.x - (base_f.point.x + shift.x),
                                    moved_f.point.y - (base_f.point.y + shift.y));
      pass = pass && dev < 1e-8;

      const double t = 0.75;
      const Point o = pole(SpaceForm::Hyperbolic);
      const CenterOfMass base_h = center_of_mass({SpaceForm::Hyperbolic, o, rho},
                                                 RadialProfile(SpaceForm::Hyperbolic, 2));
      const CenterOfMass moved_h =
          center_of_mass({SpaceForm::Hyperbolic, exp_map(o, {o, t, 0.0}), rho},
                         RadialProfile(SpaceForm::Hyperbolic, 2));
      const Point boosted{SpaceForm::Hyperbolic,
                          base_h.point.x0() * std::sinh(t) + base_h.point.x * std::cosh(t),
                          base_h.point.y};
      pass = pass && distance(moved_h.point, boosted) < 1e-8;
    }
    record(10, "center of mass: symmetry, equivariance, residual", pass,
           "worst center dev " + fmt(worst_center) + ", resid " + fmt(worst_resid));
  }

  {  // 11. Rayleigh upper bounds from the aligned test functions
    bool pass = true;
    double disk_match = 0.0;
    auto check_ctx = [&](const CertificateContext& ctx) {
      const auto [q1, q2] = rayleigh_testfn(ctx.domain, ctx.frame, ctx.profile);
      const double mu1 = ctx.fem.spectrum.eigenvalues[1];
      const double mu2 = ctx.fem.spectrum.eigenvalues[2];
      pass = pass && q1 >= mu1 - (2.0 * ctx.fem.error_estimate[1] + 1e-8 * (1.0 + mu1));
      pass = pass && q2 >= mu2 - (2.0 * ctx.fem.error_estimate[2] + 1e-8 * (1.0 + mu2));
      return std::make_pair(q1, q2);
    };
    for (const auto& ctx : flat_ctx) check_ctx(ctx);
    for (const auto& ctx : hyp_ctx) check_ctx(ctx);
    {  // geodesic disks: quotients equal mu_1(B(R)) to 1e-4 relative
      const auto [fq1, fq2] = check_ctx(flat_ctx[0]);
      const double fmu = mu1_ball(SpaceForm::Flat, 2,
                                  radius_from_volume(SpaceForm::Flat, 2,
                                                     domain_volume(flat_ctx[0].domain)));
      const auto [hq1, hq2] = check_ctx(hyp_ctx[0]);
      const double hmu = mu1_ball(SpaceForm::Hyperbolic, 2,
                                  radius_from_volume(SpaceForm::Hyperbolic, 2,
                                                     domain_volume(hyp_ctx[0].domain)));
      disk_match = std::max({rel_err(fq1, fmu), rel_err(fq2, fmu), rel_err(hq1, hmu),
                             rel_err(hq2, hmu)});
      pass = pass && disk_match < 1e-4;
    }
    record(11, "Rayleigh quotients dominate FEM eigenvalues", pass,
           "disk match " + fmt(disk_match));
  }

  {  // 12. Hersch-Payne on all flat domains
    bool pass = true;
    double disk_gap = 0.0;
    for (std::size_t i = 0; i < flat_ctx.size(); ++i) {
      const CertificateReport rep = check_hersch_payne(flat_ctx[i]);
      pass = pass && rep.pass;
      if (i == 0) {
        disk_gap = std::abs(rep.gap) / rep.rhs;
        pass = pass && disk_gap < 1e-2;
      }
    }
    record(12, "Hersch-Payne: 1/mu1 + 1/mu2 >= P/pi on flat domains", pass,
           "disk equality gap " + fmt(disk_gap));
  }

  {  // 13. convergence order on the unit disk
    const double rate = flat_ref.fitted_rate[1];
    const bool pass = rate > 1.7 && rate < 2.3;
    record(13, "fitted convergence rate for mu_1 in [1.7, 2.3]", pass, "rate " + fmt(rate));
  }

  if (g_failures == 0) {
    std::printf("acceptance: all 13 criteria PASS\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
