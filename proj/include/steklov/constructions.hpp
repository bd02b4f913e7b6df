#pragma once

#include <array>
#include <string>
#include <utility>

#include "steklov/fem.hpp"
#include "steklov/radial.hpp"
#include "steklov/star_domain.hpp"

namespace steklov {

// Point p with vanishing g-weighted boundary moments
// int_{dOmega} g(r_p) x_i / r_p dA = 0, i = 1, 2.
struct CenterOfMass {
  Point point;
  std::array<double, 2> residual = {0.0, 0.0};
  int iterations = 0;
  bool ambiguous = false;  // a perturbed start converged to a different root
};

// Damped Newton on the boundary moment map; the initial guess is the
// intrinsic boundary centroid (Riemannian mean of the quadrature nodes).
// Eight perturbed restarts probe for second roots.
CenterOfMass center_of_mass(const StarDomain& domain, const RadialProfile& profile);

// Piecewise-linear function on the boundary loop of a refined solve, with the
// boundary mass matrix as the discrete pairing <f, u> = f^T M u.
struct BoundaryTrace {
  std::vector<Point> points;
  Eigen::VectorXd values;
  Eigen::MatrixXd mass;
};

BoundaryTrace boundary_trace(const RefinedSpectrum& fem, int eig_index);

// Rotated normal-coordinate axes at the center of mass: sigma_1 at `angle`,
// sigma_2 at angle + pi/2, with the sigma_2 test function orthogonal to u1.
struct TestFunctionFrame {
  Point center;
  double angle = 0.0;
  // [ int g x1~/r dA, int g x2~/r dA, <g x2~/r, u1>_M ]
  std::array<double, 3> orthogonality_residuals = {0.0, 0.0, 0.0};
  bool degenerate = false;  // constraint vanished identically; any angle works
};

// Finds the angle alpha in [0, pi) with
// h(alpha) = int g(r) (-sin a x1 + cos a x2)/r u1 dA = 0 by bisection;
// h(alpha + pi) = -h(alpha) guarantees a sign change.
TestFunctionFrame align_rotation(const StarDomain& domain, const Point& p,
                                 const BoundaryTrace& u1);

// |grad(g(r) x_i / r)|^2 = (g')^2 x_i^2/r^2 + g^2/sin_k^2 (1 - x_i^2/r^2).
double grad_norm_sq_testfn(const RadialProfile& profile, double r, double xi);

// Rayleigh quotients of the two aligned test functions g(r) x_i~/r:
// interior Dirichlet energy over boundary L2 norm; upper bounds for mu_1 and
// mu_2 up to numerical tolerance.
std::pair<double, double> rayleigh_testfn(const StarDomain& domain,
                                          const TestFunctionFrame& frame,
                                          const RadialProfile& profile);

struct CertificateReport {
  std::string name;
  std::string context;
  double lhs = 0.0;   // side the inequality proves larger
  double rhs = 0.0;
  double gap = 0.0;   // lhs - rhs; PASS iff gap >= -tol
  double tol = 0.0;
  bool pass = false;
  bool degenerate = false;

  std::string csv_row() const;  // name,context,lhs,rhs,gap,tol,pass
};

// Shared inputs for the certificate checks on one domain.
struct CertificateContext {
  StarDomain domain;
  RadialProfile profile;
  CenterOfMass com;
  RefinedSpectrum fem;
  TestFunctionFrame frame;
  std::string descriptor;
  double tol_multiplier = 1.0;
};

// Solves the domain with refinement (count >= 3 eigenpairs), locates the
// center of mass and aligns the rotation.
CertificateContext prepare_certificates(const StarDomain& domain, int eigen_count, int levels,
                                        double tol_multiplier = 1.0);

// int_{dOmega} g^2 dA >= vol(S(R)) g^2(R), R volume-matched.
CertificateReport check_boundary_g2(const CertificateContext& ctx);

// int_{B(R)} F dV >= int_Omega F dV (equality in the flat case, F constant).
CertificateReport check_F_rearrangement(const CertificateContext& ctx);

// 1/mu_1(Omega) >= 1/mu_1(B(R)) = sinh R at matched volume (hyperbolic, n=2).
CertificateReport check_theorem_hyperbolic(const CertificateContext& ctx);

// 1/mu_1 + 1/mu_2 >= 2R at matched area (flat, n=2).
CertificateReport check_theorem_euclidean(const CertificateContext& ctx);

// 1/mu_1 + 1/mu_2 >= P(Omega)/pi (flat, simply connected).
CertificateReport check_hersch_payne(const CertificateContext& ctx);

// Assembled intermediate inequality: int_{dOmega} g^2 dA <=
// sum_i (1/mu_i) int_Omega [g^2/sin_k^2 + ((g')^2 - g^2/sin_k^2) x_i~^2/r^2] dV.
CertificateReport check_sum1_chain(const CertificateContext& ctx);

}  // namespace steklov
