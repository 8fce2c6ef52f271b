#pragma once

// Numerical oracles for the radial equation
//
//   (1/S^2) d/dr (S^2 dR/dr) - L(L+1) R / S^2 + E^2 R = 0,   S = sin_k(r),
//
// that never look at the closed-form solutions: a finite-difference residual
// for a given profile, and a shooting eigenvalue search on the sphere.

#include <vector>

#include "curvedwave/kappa_trig.hpp"
#include "curvedwave/radial_function.hpp"

namespace curvedwave {

/// max over grid of |residual(r)| / max over grid of |E^2 R(r)|, with R' and R''
/// from second-order central differences of step h. Returns the absolute
/// maximum when E^2 R vanishes on the grid.
double radial_operator_residual(const RadialFunction& fn, double energy_sq,
                                const std::vector<double>& grid, double h = 1e-5);

/// `points` equally spaced radii strictly inside [lower + margin, upper - margin].
std::vector<double> interior_grid(double lower, double upper, int points, double margin = 1e-3);

struct ShootingOptions {
  double rel_tol = 1e-10;          // ODE integration
  double start_fraction = 1e-6;    // launch offset as a fraction of pi/sqrt(k)
  double scan_step = 0.25;         // E^2 sampling step for bracketing
  double bisect_rel_tol = 1e-13;   // on E^2
};

/// Wronskian at the equator between the solution regular at the north pole and
/// the one regular at the south pole, each integrated from its own pole.
double wronskian_mismatch(int L, Curvature kappa, double energy_sq,
                          const ShootingOptions& opts = {});

/// Up to `count` eigenvalues E^2 in (lo, hi), ascending. Throws
/// NoEigenvalueError when the window holds none and IntegrationError if the
/// ODE solver fails.
std::vector<double> shoot_eigenvalues(int L, Curvature kappa, double lo, double hi, int count,
                                      const ShootingOptions& opts = {});

}  // namespace curvedwave
