#pragma once

// Regular radial solutions on hyperbolic space (k < 0).
//
// In rho = E s and k~ = |k| / E^2 the radial function is
//   R(rho) = rho^L 2F1(a, b; L + 3/2; -k~ rho^2),
//   a, b = [(L+1) -/+ B] / 2,  B = sqrt(k~^2 - k~) / k~,
// which is a complex-conjugate pair for k~ < 1 and never terminates. The
// series is used inside |t| <= 0.8 (and rho <= 8, beyond which it cancels
// badly); further out the rho-equation is marched with fixed-node RK4 in
// u = ln(rho), started from the series values.

#include <string>
#include <vector>

#include "curvedwave/hypergeometric.hpp"
#include "curvedwave/radial_function.hpp"

namespace curvedwave {

inline constexpr double kHandoffT = 0.8;
inline constexpr double kSeriesRhoCap = 8.0;

struct HyperbolicRadialSpec {
  int L = 0;
  Curvature kappa{-1.0};
  double energy_sq = 1.0;

  static HyperbolicRadialSpec make(int L, Curvature kappa, double energy_sq);
  /// k = -1 and E^2 = 1 / k~.
  static HyperbolicRadialSpec from_kappa_tilde(int L, double kappa_tilde_abs);

  double kappa_tilde_abs() const noexcept { return -kappa.value() / energy_sq; }
  /// Radius in rho where the series hands over to the ODE.
  double handoff_rho() const;
};

HypergeometricParams hyperbolic_params(int L, double kappa_tilde_abs);

/// rho^L 2F1(a, b; c; -k~ rho^2) by direct summation; |t| < 1 required.
double hyperbolic_series(const HyperbolicRadialSpec& spec, double rho);
long double hyperbolic_series(const HyperbolicRadialSpec& spec, long double rho);

/// Value obtained by marching the ODE from `start_rho` (series-initialized)
/// to `rho`. Throws IntegrationError on a non-finite state.
long double hyperbolic_continued(const HyperbolicRadialSpec& spec, long double start_rho,
                                 long double rho);

/// R(rho): series up to handoff_rho(), ODE continuation beyond.
double hyperbolic_radial(const HyperbolicRadialSpec& spec, double rho);
long double hyperbolic_radial(const HyperbolicRadialSpec& spec, long double rho);

/// r -> R(E sin_k(r)) on [0, inf), for residual checks in the geodesic radius.
RadialFunction hyperbolic_profile(const HyperbolicRadialSpec& spec);

/// CSV with columns rho,value.
std::string hyperbolic_profile_csv(const HyperbolicRadialSpec& spec,
                                   const std::vector<double>& rhos);

}  // namespace curvedwave
