#pragma once

// Curvature-dependent trigonometric functions.
//
//   cos_k(k, x) = cos(sqrt(k) x),            k > 0
//               = 1,                         k = 0
//               = cosh(sqrt(-k) x),          k < 0
//   sin_k(k, x) = sin(sqrt(k) x) / sqrt(k),  k > 0
//               = x,                         k = 0
//               = sinh(sqrt(-k) x)/sqrt(-k), k < 0
//
// They satisfy cos_k^2 + k sin_k^2 = 1 for every k. Near |k| x^2 = 0 a short
// Taylor series is used so both functions are continuous in k at k = 0.

#include <cmath>
#include <concepts>

#include "curvedwave/errors.hpp"

namespace curvedwave {

enum class Geometry { spherical, flat, hyperbolic };

/// Signed sectional curvature of the 3-space.
class Curvature {
 public:
  constexpr Curvature() = default;
  explicit Curvature(double kappa);

  constexpr double value() const noexcept { return kappa_; }

  constexpr Geometry geometry() const noexcept {
    if (kappa_ > 0.0) return Geometry::spherical;
    if (kappa_ < 0.0) return Geometry::hyperbolic;
    return Geometry::flat;
  }

  constexpr bool is_spherical() const noexcept { return kappa_ > 0.0; }
  constexpr bool is_hyperbolic() const noexcept { return kappa_ < 0.0; }

  /// Geodesic distance from a pole to the antipode (k > 0 only).
  double antipode() const;
  /// Geodesic distance from a pole to the equator (k > 0 only).
  double equator() const;

  friend constexpr bool operator==(const Curvature&, const Curvature&) = default;

 private:
  double kappa_ = 0.0;
};

const char* to_string(Geometry g) noexcept;

namespace detail {

// Below this value of |k| x^2 the series branch is used.
inline constexpr double kSeriesThreshold = 1e-8;

template <std::floating_point T>
T cos_k(double kappa, T x) {
  using std::cos, std::cosh, std::sqrt;
  const T u = static_cast<T>(kappa) * x * x;
  if (std::abs(u) < static_cast<T>(kSeriesThreshold)) {
    return 1 - u / 2 + u * u / 24;
  }
  if (kappa > 0.0) return cos(sqrt(static_cast<T>(kappa)) * x);
  return cosh(sqrt(static_cast<T>(-kappa)) * x);
}

template <std::floating_point T>
T sin_k(double kappa, T x) {
  using std::sin, std::sinh, std::sqrt;
  const T u = static_cast<T>(kappa) * x * x;
  if (std::abs(u) < static_cast<T>(kSeriesThreshold)) {
    return x * (1 - u / 6 + u * u / 120);
  }
  if (kappa > 0.0) {
    const T root = sqrt(static_cast<T>(kappa));
    return sin(root * x) / root;
  }
  const T root = sqrt(static_cast<T>(-kappa));
  return sinh(root * x) / root;
}

}  // namespace detail

double cos_k(Curvature kappa, double x);
double sin_k(Curvature kappa, double x);
long double cos_k(Curvature kappa, long double x);
long double sin_k(Curvature kappa, long double x);

/// sin_k / cos_k. Throws PoleError when |cos_k| < pole_tolerance.
double tan_k(Curvature kappa, double x, double pole_tolerance = 1e-12);

}  // namespace curvedwave
