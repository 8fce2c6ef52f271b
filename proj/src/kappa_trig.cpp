#include "curvedwave/kappa_trig.hpp"

#include <numbers>
#include <string>

namespace curvedwave {

Curvature::Curvature(double kappa) : kappa_(kappa) {
  if (!std::isfinite(kappa)) {
    throw DomainError("curvature must be finite, got " + std::to_string(kappa));
  }
}

double Curvature::antipode() const {
  if (!is_spherical()) throw DomainError("antipode requires positive curvature");
  return std::numbers::pi / std::sqrt(kappa_);
}

double Curvature::equator() const { return 0.5 * antipode(); }

const char* to_string(Geometry g) noexcept {
  switch (g) {
    case Geometry::spherical:
      return "spherical";
    case Geometry::flat:
      return "flat";
    case Geometry::hyperbolic:
      return "hyperbolic";
  }
  return "unknown";
}

double cos_k(Curvature kappa, double x) { return detail::cos_k(kappa.value(), x); }
double sin_k(Curvature kappa, double x) { return detail::sin_k(kappa.value(), x); }
long double cos_k(Curvature kappa, long double x) { return detail::cos_k(kappa.value(), x); }
long double sin_k(Curvature kappa, long double x) { return detail::sin_k(kappa.value(), x); }

double tan_k(Curvature kappa, double x, double pole_tolerance) {
  const double c = cos_k(kappa, x);
  if (std::abs(c) < pole_tolerance) {
    throw PoleError("tan_k: cos_k vanishes at x = " + std::to_string(x));
  }
  return sin_k(kappa, x) / c;
}

}  // namespace curvedwave
