#pragma once

// Discrete spectrum of the free particle on the 3-sphere.
//
// A level is labelled by the polynomial degree n and angular momentum L.
// Even n = 2 n_r comes from type I solutions, odd n = 2 n_r + 1 from type II.
// Both give E^2 = k N (N + 2) with N = n + L, so each N is (N+1)^2-fold
// degenerate once the 2L+1 magnetic states are counted.

#include <cstdint>
#include <vector>

#include "curvedwave/hypergeometric.hpp"
#include "curvedwave/kappa_trig.hpp"

namespace curvedwave {

enum class SolutionType { I, II };

const char* to_string(SolutionType t) noexcept;

struct SphereLevel {
  int n_r = 0;
  int L = 0;
  SolutionType type = SolutionType::I;
  Curvature kappa{1.0};

  /// Build from the unified degree n and L.
  static SphereLevel from_degree(int n, int L, Curvature kappa);
  static SphereLevel make(int n_r, int L, SolutionType type, Curvature kappa);

  int n() const noexcept { return type == SolutionType::I ? 2 * n_r : 2 * n_r + 1; }
  int N() const noexcept { return n() + L; }
  /// E^2 / k = N (N + 2), exact.
  std::int64_t energy_coeff() const noexcept {
    const std::int64_t big_n = N();
    return big_n * (big_n + 2);
  }
  double energy_sq() const noexcept { return kappa.value() * static_cast<double>(energy_coeff()); }
  /// k / E^2; +inf for the zero-energy ground state.
  double kappa_tilde() const noexcept { return 1.0 / static_cast<double>(energy_coeff()); }

  friend bool operator==(const SphereLevel&, const SphereLevel&) = default;
};

/// Dimensionless variables rho = E s and k~ = k / E^2, with t = k~ rho^2.
struct AdimensionalState {
  double rho = 0.0;
  double kappa_tilde = 0.0;

  static AdimensionalState from_s(double s, double kappa, double energy_sq);
  double t() const noexcept { return kappa_tilde * rho * rho; }
};

/// (hbar^2 / 2m) k N (N + 2).
double energy(const SphereLevel& level, double hbar_sq_over_2m = 1.0);

/// (N + 1)^2.
std::int64_t degeneracy(int N);

/// Type I parameters: a, b = [(L+1) -/+ B] / 2, c = L + 3/2,
/// B = sqrt(k~ (k~ + 1)) / k~. Stored with a <= b. k~ = +inf is accepted
/// as the zero-energy limit (B = 1).
HypergeometricParams hypergeometric_params_type1(int L, double kappa_tilde);
/// Type II parameters: a', b' = [(L+2) -/+ B] / 2, c = L + 3/2.
HypergeometricParams hypergeometric_params_type2(int L, double kappa_tilde);
/// Parameters matching the level's type at its own k~.
HypergeometricParams hypergeometric_params(const SphereLevel& level);

/// All levels with N <= N_max, ordered by N then by increasing L.
std::vector<SphereLevel> enumerate_levels(int N_max, Curvature kappa = Curvature{1.0});

}  // namespace curvedwave
