#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace steklov {

// The two space forms handled: R^n (curvature 0) and H^n (curvature -1).
enum class SpaceForm { Flat, Hyperbolic };

// sin_k r: r in the flat case, sinh r in the hyperbolic case.
inline double sin_k(SpaceForm space, double r) {
  if (r < 0.0) throw std::invalid_argument("sin_k: r must be nonnegative");
  return space == SpaceForm::Flat ? r : std::sinh(r);
}

// cos_k r: 1 in the flat case, cosh r in the hyperbolic case.
inline double cos_k(SpaceForm space, double r) {
  if (r < 0.0) throw std::invalid_argument("cos_k: r must be nonnegative");
  return space == SpaceForm::Flat ? 1.0 : std::cosh(r);
}

inline std::string to_string(SpaceForm space) {
  return space == SpaceForm::Flat ? "flat" : "hyperbolic";
}

}  // namespace steklov
