#include "steklov/star_domain.hpp"

#include <cmath>
#include <stdexcept>

#include "steklov/quadrature.hpp"

namespace steklov {

namespace {
constexpr int kScanGrid = 4096;
}

double FourierSeries::eval(double theta) const {
  double v = c0;
  for (std::size_t k = 0; k < a.size(); ++k) v += a[k] * std::cos((k + 1.0) * theta);
  for (std::size_t k = 0; k < b.size(); ++k) v += b[k] * std::sin((k + 1.0) * theta);
  return v;
}

double FourierSeries::deriv(double theta) const {
  double v = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) v -= (k + 1.0) * a[k] * std::sin((k + 1.0) * theta);
  for (std::size_t k = 0; k < b.size(); ++k) v += (k + 1.0) * b[k] * std::cos((k + 1.0) * theta);
  return v;
}

double FourierSeries::max_value() const {
  double m = -1e300;
  for (int i = 0; i < kScanGrid; ++i) m = std::max(m, eval(2.0 * M_PI * i / kScanGrid));
  return m;
}

double FourierSeries::min_value() const {
  double m = 1e300;
  for (int i = 0; i < kScanGrid; ++i) m = std::min(m, eval(2.0 * M_PI * i / kScanGrid));
  return m;
}

FourierSeries disk_series(double R) {
  if (!(R > 0.0)) throw std::invalid_argument("disk_series: R must be > 0");
  return {R, {}, {}};
}

FourierSeries perturbed_disk_series(double R0, double eps, int m) {
  if (!(R0 > 0.0)) throw std::invalid_argument("perturbed_disk_series: R0 must be > 0");
  if (eps < 0.0 || eps > 0.5) throw std::invalid_argument("perturbed_disk_series: eps in [0, 0.5]");
  if (m < 1) throw std::invalid_argument("perturbed_disk_series: m must be >= 1");
  FourierSeries s{R0, std::vector<double>(m, 0.0), {}};
  s.a[m - 1] = R0 * eps;
  return s;
}

FourierSeries ellipse_series(double a, double b, int max_degree) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::invalid_argument("ellipse_series: axes must be > 0");
  const int N = kScanGrid;
  auto r = [&](double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return a * b / std::sqrt(b * b * c * c + a * a * s * s);
  };
  FourierSeries out;
  double mean = 0.0;
  for (int j = 0; j < N; ++j) mean += r(2.0 * M_PI * j / N);
  mean /= N;
  out.c0 = mean;
  // r is even and pi-periodic: only cos(2k theta) survives.
  for (int k = 1; k <= max_degree; ++k) {
    double ck = 0.0;
    for (int j = 0; j < N; ++j) {
      const double theta = 2.0 * M_PI * j / N;
      ck += r(theta) * std::cos(k * theta);
    }
    ck *= 2.0 / N;
    out.a.push_back(ck);
  }
  while (!out.a.empty() && std::abs(out.a.back()) < 1e-13 * out.c0) out.a.pop_back();
  return out;
}

StarDomain::StarDomain(SpaceForm space, Point center, FourierSeries rho)
    : space_(space), center_(center), rho_(std::move(rho)) {
  if (center_.space != space_) throw std::invalid_argument("StarDomain: center on wrong space form");
  if (!(rho_.min_value() > 0.0)) throw std::invalid_argument("StarDomain: rho must stay positive");
}

Point StarDomain::boundary_point(double theta) const {
  const double r = rho_.eval(theta);
  return exp_map(center_, {center_, r * std::cos(theta), r * std::sin(theta)});
}

void StarDomain::scale(double s) {
  if (!(s > 0.0)) throw std::invalid_argument("StarDomain::scale: s must be > 0");
  rho_.c0 *= s;
  for (double& v : rho_.a) v *= s;
  for (double& v : rho_.b) v *= s;
}

int default_boundary_nodes(const StarDomain& domain) {
  return std::max(256, 8 * domain.rho().degree());
}

BoundaryQuadrature boundary_quadrature(const StarDomain& domain, int node_count) {
  const int n = node_count > 0 ? node_count : default_boundary_nodes(domain);
  BoundaryQuadrature quad;
  quad.nodes.reserve(n);
  const double dtheta = 2.0 * M_PI / n;
  for (int j = 0; j < n; ++j) {
    const double theta = j * dtheta;
    const double rho = domain.radius(theta);
    const double drho = domain.radius_deriv(theta);
    const double arc = std::sqrt(drho * drho + std::pow(sin_k(domain.space(), rho), 2));
    quad.nodes.push_back({theta, domain.boundary_point(theta), arc * dtheta});
    quad.total_length += arc * dtheta;
  }
  return quad;
}

double boundary_integral(const StarDomain& domain,
                         const std::function<double(const BoundaryNode&)>& f,
                         const BoundaryQuadrature& quad) {
  (void)domain;
  double acc = 0.0;
  for (const auto& node : quad.nodes) acc += f(node) * node.weight;
  return acc;
}

double domain_volume(const StarDomain& domain) {
  const int n = default_boundary_nodes(domain);
  const double dtheta = 2.0 * M_PI / n;
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const double rho = domain.radius(j * dtheta);
    if (domain.space() == SpaceForm::Flat) {
      acc += 0.5 * rho * rho;
    } else {
      const double sh = std::sinh(0.5 * rho);
      acc += 2.0 * sh * sh;  // cosh(rho) - 1
    }
  }
  return acc * dtheta;
}

std::vector<InteriorNode> interior_quadrature(const StarDomain& domain, int n_theta) {
  const int nt = n_theta > 0 ? n_theta : default_boundary_nodes(domain);
  const double dtheta = 2.0 * M_PI / nt;
  std::vector<InteriorNode> nodes;
  for (int j = 0; j < nt; ++j) {
    const double theta = j * dtheta;
    const double rho = domain.radius(theta);
    const double ct = std::cos(theta), st = std::sin(theta);
    // composite Gauss panels along the ray, one per unit of radius
    const int panels = 1 + static_cast<int>(rho);
    const double dr = rho / panels;
    for (int p = 0; p < panels; ++p) {
      const double mid = (p + 0.5) * dr;
      for (const auto& [x, w] : kGauss16) {
        const double r = mid + 0.5 * dr * x;
        const Point q = exp_map(domain.center(), {domain.center(), r * ct, r * st});
        nodes.push_back({q, 0.5 * dr * w * dtheta * sin_k(domain.space(), r)});
      }
    }
  }
  return nodes;
}

double normalize_to_volume(StarDomain& domain, double target) {
  if (!(target > 0.0)) throw std::invalid_argument("normalize_to_volume: target must be > 0");
  if (domain.space() == SpaceForm::Flat) {
    const double s = std::sqrt(target / domain_volume(domain));
    domain.scale(s);
    return s;
  }
  // hyperbolic volume is strictly increasing in the scale; bracket and bisect
  double lo = 1e-6, hi = 1.0;
  auto vol_at = [&](double s) {
    StarDomain d = domain;
    d.scale(s);
    return domain_volume(d);
  };
  while (vol_at(hi) < target) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (vol_at(mid) < target) lo = mid; else hi = mid;
    if ((hi - lo) <= 1e-15 * hi) break;
  }
  const double s = 0.5 * (lo + hi);
  domain.scale(s);
  return s;
}

}  // namespace steklov
