#pragma once

#include <array>
#include <vector>

#include "steklov/star_domain.hpp"

namespace steklov {

// Disk-type triangulation of a star domain.  Structured polar layout:
// vertex 0 is the center, ring i (1..n_r) holds n_theta vertices at geodesic
// radius (i/n_r) rho(theta_j); the outermost ring is the boundary loop.
struct Mesh {
  SpaceForm space = SpaceForm::Flat;
  std::vector<Point> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<int> boundary_loop;
  double h = 0.0;  // max geodesic edge length
  int n_theta = 0;
  int n_r = 0;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int boundary_count() const { return static_cast<int>(boundary_loop.size()); }
};

// level >= 0; n_theta = 64 * 2^level boundary nodes.  Throws if the boundary
// series is under-resolved (Fourier degree > n_theta/8) or a triangle
// degenerates below 1e-14 of the domain area.
Mesh mesh_star_domain(const StarDomain& domain, int level);

}  // namespace steklov
