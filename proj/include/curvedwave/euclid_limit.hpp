#pragma once

// Spherical Bessel functions and the contraction of sphere solutions onto them.
//
// Along k_n = k^2 / ((n+L)(n+L+2)) the sphere energy stays at k^2 while the
// curvature goes to zero, and sin_k(r)^L Q_{n,L}(cos_k(r)) approaches
// j_L(k r) up to the factor k^L / (2L+1)!! fixed by the r -> 0 behaviour.

#include <cmath>
#include <concepts>
#include <limits>
#include <string>
#include <vector>

#include "curvedwave/radial_function.hpp"

namespace curvedwave {

namespace detail {

template <std::floating_point T>
T sph_bessel_series(int L, T x) {
  // x^L / (2L+1)!! * sum_k (-x^2/2)^k / (k! (2L+3)(2L+5)...(2L+2k+1))
  T lead = 1;
  for (int m = 1; m <= L; ++m) lead *= x / static_cast<T>(2 * m + 1);
  T term = 1, sum = 1;
  const T half_x2 = x * x / 2;
  for (int k = 1; k < 60; ++k) {
    term *= -half_x2 / (static_cast<T>(k) * static_cast<T>(2 * L + 2 * k + 1));
    sum += term;
    if (std::abs(term) <= std::numeric_limits<T>::epsilon() * std::abs(sum)) break;
  }
  return lead * sum;
}

template <std::floating_point T>
T spherical_bessel_j(int L, T x) {
  using std::sin, std::cos;
  if (x < 1) return sph_bessel_series(L, x);
  const T j0 = sin(x) / x;
  if (L == 0) return j0;
  const T j1 = (sin(x) / x - cos(x)) / x;
  if (L == 1) return j1;
  if (x > static_cast<T>(L)) {
    // Upward recurrence is stable above the turning point.
    T prev = j0, curr = j1;
    for (int l = 1; l < L; ++l) {
      const T next = static_cast<T>(2 * l + 1) / x * curr - prev;
      prev = curr;
      curr = next;
    }
    return curr;
  }
  // Miller's downward recurrence, normalized on whichever of j0, j1 is larger.
  const int start = L + 20 + static_cast<int>(x);
  T above = 0, here = std::numeric_limits<T>::min() * 1e10L;
  T value_at_L = 0, at0 = 0, at1 = 0;
  for (int l = start; l >= 1; --l) {
    const T below = static_cast<T>(2 * l + 1) / x * here - above;
    above = here;
    here = below;
    if (std::abs(here) > static_cast<T>(1e200)) {
      const T rescale = static_cast<T>(1e-200);
      here *= rescale;
      above *= rescale;
      value_at_L *= rescale;
      at1 *= rescale;
    }
    if (l - 1 == L) value_at_L = here;
    if (l - 1 == 1) at1 = here;
    if (l - 1 == 0) at0 = here;
  }
  return std::abs(j0) >= std::abs(j1) ? value_at_L * (j0 / at0) : value_at_L * (j1 / at1);
}

}  // namespace detail

/// j_L(x) for x >= 0.
double spherical_bessel_j(int L, double x);
long double spherical_bessel_j(int L, long double x);

/// j_L(k r) as a flat-space radial function on [0, inf).
RadialFunction bessel_profile(int L, double k);

/// k^2 / ((n+L)(n+L+2)); requires n + L > 0.
double limit_curvature(int n, int L, double k);

/// r -> (k^L/(2L+1)!!) sin_k(r)^L Q_{n,L}(cos_k(r)) at curvature k_n, on the
/// upper hemisphere. The n = L = 0 member is the constant 1 on [0, inf).
RadialFunction contracted_profile(int n, int L, double k);

struct LimitSequenceSpec {
  int L = 0;
  double k = 1.0;
  std::vector<int> n_values;
  double r_max = 1.0;

  /// Throws DomainError unless every member has positive curvature and
  /// r_max lies below its equator.
  void validate() const;
  /// Largest admissible r_max (the smallest member equator).
  double hemisphere_limit() const;
};

struct LimitEntry {
  int n = 0;
  double kappa_n = 0.0;
  double sup_distance = 0.0;
};

struct ConvergenceReport {
  LimitSequenceSpec spec;
  std::vector<LimitEntry> entries;
  bool strictly_decreasing = false;
};

/// Sup-norm distance to j_L(k r) on a uniform grid over [0, r_max].
ConvergenceReport convergence_report(const LimitSequenceSpec& spec, int grid_points = 2000);

/// CSV with columns L,k,n,kappa_n,sup_distance.
std::string convergence_csv(const ConvergenceReport& rep);

}  // namespace curvedwave
