#include "steklov/fem.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>
#include <cmath>
#include <stdexcept>
#include <string>

namespace steklov {

namespace {

std::string diag_conditioning(const Eigen::SparseMatrix<double>& m) {
  double lo = 1e300, hi = 0.0;
  for (int k = 0; k < m.outerSize(); ++k) {
    const double d = m.coeff(k, k);
    lo = std::min(lo, std::abs(d));
    hi = std::max(hi, std::abs(d));
  }
  return "diag ratio ~" + std::to_string(hi / std::max(lo, 1e-300));
}

}  // namespace

AssembledSystem assemble(const Mesh& mesh) {
  const int n = mesh.vertex_count();
  std::vector<std::array<double, 2>> z(n);
  for (int i = 0; i < n; ++i) z[i] = chart_coords(mesh.vertices[i]);

  std::vector<Eigen::Triplet<double>> kt;
  kt.reserve(mesh.triangles.size() * 9);
  for (const auto& tri : mesh.triangles) {
    const auto& a = z[tri[0]];
    const auto& b = z[tri[1]];
    const auto& c = z[tri[2]];
    // edge vectors opposite each vertex; K_e(i,j) = e_i . e_j / (4A)
    const double ex[3] = {c[0] - b[0], a[0] - c[0], b[0] - a[0]};
    const double ey[3] = {c[1] - b[1], a[1] - c[1], b[1] - a[1]};
    const double area = 0.5 * (ex[2] * (-ey[1]) - ey[2] * (-ex[1]));
    if (!(area > 0.0) || !std::isfinite(area))
      throw std::runtime_error("assemble: degenerate triangle");
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        kt.emplace_back(tri[i], tri[j], (ex[i] * ex[j] + ey[i] * ey[j]) / (4.0 * area));
  }

  std::vector<Eigen::Triplet<double>> mt;
  const int nb = mesh.boundary_count();
  // 2-point Gauss per boundary edge; exact for the flat (weight 1) case
  constexpr double kXi[2] = {0.21132486540518712, 0.78867513459481288};
  for (int e = 0; e < nb; ++e) {
    const int u = mesh.boundary_loop[e];
    const int v = mesh.boundary_loop[(e + 1) % nb];
    const double len = std::hypot(z[v][0] - z[u][0], z[v][1] - z[u][1]);
    double m00 = 0.0, m01 = 0.0, m11 = 0.0;
    for (double xi : kXi) {
      const std::array<double, 2> p = {z[u][0] + xi * (z[v][0] - z[u][0]),
                                       z[u][1] + xi * (z[v][1] - z[u][1])};
      const double w = 0.5 * len * chart_boundary_weight(mesh.space, p);
      if (!std::isfinite(w)) throw std::runtime_error("assemble: boundary weight blew up");
      m00 += w * (1.0 - xi) * (1.0 - xi);
      m01 += w * (1.0 - xi) * xi;
      m11 += w * xi * xi;
    }
    mt.emplace_back(u, u, m00);
    mt.emplace_back(u, v, m01);
    mt.emplace_back(v, u, m01);
    mt.emplace_back(v, v, m11);
  }

  AssembledSystem sys;
  sys.K.resize(n, n);
  sys.K.setFromTriplets(kt.begin(), kt.end());
  sys.Mb.resize(n, n);
  sys.Mb.setFromTriplets(mt.begin(), mt.end());
  sys.boundary = mesh.boundary_loop;
  sys.space = mesh.space;
  sys.mesh_h = mesh.h;
  return sys;
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> boundary_schur(const AssembledSystem& sys) {
  const int n = sys.K.rows();
  const int nb = static_cast<int>(sys.boundary.size());
  std::vector<int> where(n, -1);  // boundary position or -1
  for (int i = 0; i < nb; ++i) where[sys.boundary[i]] = i;
  std::vector<int> ipos(n, -1);
  int ni = 0;
  for (int i = 0; i < n; ++i)
    if (where[i] < 0) ipos[i] = ni++;

  std::vector<Eigen::Triplet<double>> tii;
  Eigen::MatrixXd Kib = Eigen::MatrixXd::Zero(ni, nb);
  Eigen::MatrixXd Kbb = Eigen::MatrixXd::Zero(nb, nb);
  for (int k = 0; k < sys.K.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(sys.K, k); it; ++it) {
      const int r = static_cast<int>(it.row()), c = static_cast<int>(it.col());
      if (where[r] < 0 && where[c] < 0) tii.emplace_back(ipos[r], ipos[c], it.value());
      else if (where[r] < 0) Kib(ipos[r], where[c]) += it.value();
      else if (where[c] < 0) { /* transpose of Kib; skipped, K is symmetric */ }
      else Kbb(where[r], where[c]) += it.value();
    }
  }
  Eigen::SparseMatrix<double> Kii(ni, ni);
  Kii.setFromTriplets(tii.begin(), tii.end());

  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(Kii);
  if (ldlt.info() != Eigen::Success)
    throw std::runtime_error("boundary_schur: K_ii factorization failed (" +
                             diag_conditioning(Kii) + ")");
  const Eigen::MatrixXd X = ldlt.solve(Kib);
  Eigen::MatrixXd S = Kbb - Kib.transpose() * X;
  S = 0.5 * (S + S.transpose()).eval();

  Eigen::MatrixXd Mbb = Eigen::MatrixXd::Zero(nb, nb);
  for (int k = 0; k < sys.Mb.outerSize(); ++k)
    for (Eigen::SparseMatrix<double>::InnerIterator it(sys.Mb, k); it; ++it)
      Mbb(where[it.row()], where[it.col()]) += it.value();
  return {std::move(S), std::move(Mbb)};
}

SteklovSpectrum steklov_solve(const AssembledSystem& sys, int count) {
  const int nb = static_cast<int>(sys.boundary.size());
  if (count < 1 || count > nb)
    throw std::invalid_argument("steklov_solve: count must be in [1, boundary size]");

  const auto [S, Mbb] = boundary_schur(sys);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ges(S, Mbb,
                                                                Eigen::ComputeEigenvectors |
                                                                    Eigen::Ax_lBx);
  if (ges.info() != Eigen::Success)
    throw std::runtime_error("steklov_solve: generalized eigensolve failed (boundary mass " +
                             diag_conditioning(sys.Mb) + ")");

  SteklovSpectrum spec;
  spec.mesh_h = sys.mesh_h;
  spec.space = sys.space;
  spec.eigenvalues.assign(ges.eigenvalues().data(), ges.eigenvalues().data() + count);
  spec.boundary_eigenvectors = ges.eigenvectors().leftCols(count);
  return spec;
}

RefinedSpectrum solve_with_refinement(const StarDomain& domain, int count, int levels,
                                      int base_level) {
  if (levels < 2) throw std::invalid_argument("solve_with_refinement: levels must be >= 2");
  int base = base_level;
  if (base < 0) {
    base = 0;
    while ((64 << base) < 8 * domain.rho().degree()) ++base;
  }
  RefinedSpectrum out;
  out.base_level = base;
  for (int step = 0; step < levels; ++step) {
    const int level = base + step;
    Mesh mesh = mesh_star_domain(domain, level);
    AssembledSystem sys = assemble(mesh);
    SteklovSpectrum spec = steklov_solve(sys, count);
    out.levels.push_back(spec.eigenvalues);
    if (step == levels - 1) {
      const int nb = static_cast<int>(sys.boundary.size());
      std::vector<int> where(sys.K.rows(), -1);
      for (int i = 0; i < nb; ++i) where[sys.boundary[i]] = i;
      out.boundary_mass = Eigen::MatrixXd::Zero(nb, nb);
      for (int k = 0; k < sys.Mb.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(sys.Mb, k); it; ++it)
          out.boundary_mass(where[it.row()], where[it.col()]) += it.value();
      out.spectrum = std::move(spec);
      out.mesh = std::move(mesh);
    }
  }

  const auto& fine = out.levels[levels - 1];
  const auto& prev = out.levels[levels - 2];
  out.error_estimate.resize(count);
  for (int i = 0; i < count; ++i) out.error_estimate[i] = std::abs(fine[i] - prev[i]) / 3.0;

  if (levels >= 3) {
    out.fitted_rate.resize(count, 0.0);
    const auto& prev2 = out.levels[levels - 3];
    for (int i = 0; i < count; ++i) {
      const double d1 = std::abs(prev[i] - prev2[i]);
      const double d2 = std::abs(fine[i] - prev[i]);
      out.fitted_rate[i] = (d1 > 0.0 && d2 > 0.0) ? std::log2(d1 / d2) : 0.0;
    }
  }
  // monotone convergence check on the nonzero eigenvalues
  for (int i = 1; i < count && out.monotone; ++i) {
    for (int l = 2; l < levels; ++l) {
      const double a = out.levels[l - 1][i] - out.levels[l - 2][i];
      const double b = out.levels[l][i] - out.levels[l - 1][i];
      if (a * b < 0.0) {
        out.monotone = false;
        break;
      }
    }
  }
  return out;
}

}  // namespace steklov
