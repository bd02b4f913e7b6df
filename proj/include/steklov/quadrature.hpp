#pragma once

#include <array>
#include <cmath>
#include <concepts>

namespace steklov {

// 16-point Gauss-Legendre rule on [-1, 1].
inline constexpr std::array<std::array<double, 2>, 16> kGauss16 = {{
    {-0.989400934991649933, 0.0271524594117540949},
    {-0.944575023073232576, 0.0622535239386478929},
    {-0.865631202387831744, 0.0951585116824927848},
    {-0.755404408355003034, 0.124628971255533872},
    {-0.617876244402643748, 0.149595988816576732},
    {-0.458016777657227386, 0.169156519395002538},
    {-0.281603550779258913, 0.182603415044923589},
    {-0.0950125098376374402, 0.189450610455068496},
    {0.0950125098376374402, 0.189450610455068496},
    {0.281603550779258913, 0.182603415044923589},
    {0.458016777657227386, 0.169156519395002538},
    {0.617876244402643748, 0.149595988816576732},
    {0.755404408355003034, 0.124628971255533872},
    {0.865631202387831744, 0.0951585116824927848},
    {0.944575023073232576, 0.0622535239386478929},
    {0.989400934991649933, 0.0271524594117540949},
}};

// Composite 16-point Gauss-Legendre integration of f over [a, b].
// Panel count scales with interval length so long hyperbolic ranges keep
// spectral accuracy.
template <std::invocable<double> F>
double integrate(F&& f, double a, double b, int min_panels = 4) {
  if (b <= a) return 0.0;
  int panels = min_panels + static_cast<int>(std::ceil(2.0 * (b - a)));
  const double dx = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * dx;
    double acc = 0.0;
    for (const auto& [x, w] : kGauss16) acc += w * f(mid + 0.5 * dx * x);
    total += 0.5 * dx * acc;
  }
  return total;
}

}  // namespace steklov
