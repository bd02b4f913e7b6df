#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

#include "steklov/mesh.hpp"

namespace steklov {

// P1 stiffness matrix and boundary mass matrix.  Hyperbolic domains are
// assembled in Poincare-disk coordinates: by conformal invariance of the 2D
// Dirichlet energy, K is the flat stiffness of the chart mesh, and only the
// boundary mass carries the metric weight 2/(1 - |z|^2).
struct AssembledSystem {
  Eigen::SparseMatrix<double> K;   // full size, symmetric PSD, kernel = constants
  Eigen::SparseMatrix<double> Mb;  // full size, nonzeros only on boundary dofs
  std::vector<int> boundary;       // boundary dof ids in loop order
  SpaceForm space = SpaceForm::Flat;
  double mesh_h = 0.0;
};

AssembledSystem assemble(const Mesh& mesh);

struct SteklovSpectrum {
  std::vector<double> eigenvalues;        // ascending, eigenvalues[0] ~ 0
  Eigen::MatrixXd boundary_eigenvectors;  // n_b x count, Mb-orthonormal columns
  double mesh_h = 0.0;
  SpaceForm space = SpaceForm::Flat;
};

// Dense boundary reduction: the Schur complement S = K_bb - K_bi K_ii^{-1} K_ib
// (the discrete Dirichlet-to-Neumann form) and the boundary mass block, both
// indexed in boundary-loop order.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> boundary_schur(const AssembledSystem& sys);

// Solves the dense generalized symmetric eigenproblem S y = mu Mb y from the
// boundary reduction, returning the lowest `count` pairs.
SteklovSpectrum steklov_solve(const AssembledSystem& sys, int count);

struct RefinedSpectrum {
  SteklovSpectrum spectrum;                  // finest level
  Mesh mesh;                                 // finest mesh
  Eigen::MatrixXd boundary_mass;             // dense boundary block of Mb
  std::vector<std::vector<double>> levels;   // eigenvalues per refinement level
  std::vector<double> error_estimate;        // |mu^L - mu^{L-1}| / 3
  std::vector<double> fitted_rate;           // per eigenvalue, needs >= 3 levels
  bool monotone = true;                      // warning flag, not a failure
  int base_level = 0;                        // coarsest refinement level solved
};

// Solves at refinement levels base..base+levels-1 and Richardson-estimates
// the eigenvalue errors assuming O(h^2) convergence.  base_level = -1 picks
// the smallest level that resolves the boundary Fourier degree.
RefinedSpectrum solve_with_refinement(const StarDomain& domain, int count, int levels,
                                      int base_level = -1);

}  // namespace steklov
