#include "steklov/mesh.hpp"

#include <cmath>
#include <stdexcept>

namespace steklov {

namespace {

double chart_signed_area(const Mesh& mesh, const std::array<int, 3>& tri) {
  const auto a = chart_coords(mesh.vertices[tri[0]]);
  const auto b = chart_coords(mesh.vertices[tri[1]]);
  const auto c = chart_coords(mesh.vertices[tri[2]]);
  return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]));
}

}  // namespace

Mesh mesh_star_domain(const StarDomain& domain, int level) {
  if (level < 0) throw std::invalid_argument("mesh_star_domain: level must be >= 0");
  const int n_theta = 64 << level;
  if (8 * domain.rho().degree() > n_theta)
    throw std::invalid_argument("mesh_star_domain: boundary under-resolved (degree > n_theta/8)");
  const int n_r = static_cast<int>(std::ceil(n_theta * domain.max_radius() / (2.0 * M_PI)));

  Mesh mesh;
  mesh.space = domain.space();
  mesh.n_theta = n_theta;
  mesh.n_r = n_r;
  mesh.vertices.reserve(1 + static_cast<std::size_t>(n_r) * n_theta);
  mesh.vertices.push_back(domain.center());
  const double dtheta = 2.0 * M_PI / n_theta;
  for (int i = 1; i <= n_r; ++i) {
    for (int j = 0; j < n_theta; ++j) {
      const double theta = j * dtheta;
      const double r = domain.radius(theta) * i / n_r;
      mesh.vertices.push_back(
          exp_map(domain.center(), {domain.center(), r * std::cos(theta), r * std::sin(theta)}));
    }
  }
  auto vid = [n_theta](int ring, int j) { return 1 + (ring - 1) * n_theta + (j % n_theta); };

  // center fan, then two triangles per quad; theta increases counterclockwise
  for (int j = 0; j < n_theta; ++j)
    mesh.triangles.push_back({0, vid(1, j), vid(1, j + 1)});
  for (int i = 1; i < n_r; ++i) {
    for (int j = 0; j < n_theta; ++j) {
      mesh.triangles.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      mesh.triangles.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
    }
  }

  for (int j = 0; j < n_theta; ++j) mesh.boundary_loop.push_back(vid(n_r, j));

  double total_area = 0.0;
  for (const auto& tri : mesh.triangles) total_area += chart_signed_area(mesh, tri);
  for (const auto& tri : mesh.triangles) {
    const double area = chart_signed_area(mesh, tri);
    if (!(area > 1e-14 * total_area))
      throw std::runtime_error("mesh_star_domain: degenerate or inverted triangle");
  }

  double h = 0.0;
  for (const auto& tri : mesh.triangles)
    for (int e = 0; e < 3; ++e)
      h = std::max(h, distance(mesh.vertices[tri[e]], mesh.vertices[tri[(e + 1) % 3]]));
  mesh.h = h;
  return mesh;
}

}  // namespace steklov
