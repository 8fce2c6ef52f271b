#include "curvedwave/spectrum.hpp"

#include <cmath>
#include <string>

namespace curvedwave {

namespace {

double b_kappa(double kappa_tilde) {
  if (!(kappa_tilde > 0.0)) {
    throw DomainError("reduced curvature must be positive, got " + std::to_string(kappa_tilde));
  }
  // sqrt(k~(k~+1))/k~ written so that k~ -> inf is harmless.
  return std::sqrt(1.0 + 1.0 / kappa_tilde);
}

}  // namespace

const char* to_string(SolutionType t) noexcept { return t == SolutionType::I ? "I" : "II"; }

SphereLevel SphereLevel::make(int n_r, int L, SolutionType type, Curvature kappa) {
  if (n_r < 0 || L < 0) throw DomainError("quantum numbers must be non-negative");
  if (!kappa.is_spherical()) throw DomainError("sphere levels require positive curvature");
  return SphereLevel{n_r, L, type, kappa};
}

SphereLevel SphereLevel::from_degree(int n, int L, Curvature kappa) {
  if (n < 0) throw DomainError("degree must be non-negative");
  return make(n / 2, L, n % 2 == 0 ? SolutionType::I : SolutionType::II, kappa);
}

AdimensionalState AdimensionalState::from_s(double s, double kappa, double energy_sq) {
  if (!(energy_sq > 0.0)) throw DomainError("energy must be positive to adimensionalize");
  return {std::sqrt(energy_sq) * s, kappa / energy_sq};
}

double energy(const SphereLevel& level, double hbar_sq_over_2m) {
  return hbar_sq_over_2m * level.energy_sq();
}

std::int64_t degeneracy(int N) {
  if (N < 0) throw DomainError("degeneracy: N must be non-negative");
  const std::int64_t m = N + 1;
  return m * m;
}

HypergeometricParams hypergeometric_params_type1(int L, double kappa_tilde) {
  const double b = b_kappa(kappa_tilde);
  return HypergeometricParams::real(0.5 * ((L + 1) - b), 0.5 * ((L + 1) + b), L + 1.5);
}

HypergeometricParams hypergeometric_params_type2(int L, double kappa_tilde) {
  const double b = b_kappa(kappa_tilde);
  return HypergeometricParams::real(0.5 * ((L + 2) - b), 0.5 * ((L + 2) + b), L + 1.5);
}

HypergeometricParams hypergeometric_params(const SphereLevel& level) {
  return level.type == SolutionType::I
             ? hypergeometric_params_type1(level.L, level.kappa_tilde())
             : hypergeometric_params_type2(level.L, level.kappa_tilde());
}

std::vector<SphereLevel> enumerate_levels(int N_max, Curvature kappa) {
  if (N_max < 0) throw DomainError("enumerate_levels: N_max must be non-negative");
  std::vector<SphereLevel> out;
  for (int N = 0; N <= N_max; ++N) {
    for (int L = 0; L <= N; ++L) out.push_back(SphereLevel::from_degree(N - L, L, kappa));
  }
  return out;
}

}  // namespace curvedwave
