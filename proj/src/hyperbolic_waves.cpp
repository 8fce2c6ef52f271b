#include "curvedwave/hyperbolic_waves.hpp"

#include <array>
#include <cmath>

#include "curvedwave/report.hpp"

namespace curvedwave {

HyperbolicRadialSpec HyperbolicRadialSpec::make(int L, Curvature kappa, double energy_sq) {
  if (L < 0) throw DomainError("L must be non-negative");
  if (!kappa.is_hyperbolic()) throw DomainError("hyperbolic spec requires negative curvature");
  if (!(energy_sq > 0.0) || !std::isfinite(energy_sq)) {
    throw DomainError("hyperbolic spec requires positive energy");
  }
  return HyperbolicRadialSpec{L, kappa, energy_sq};
}

HyperbolicRadialSpec HyperbolicRadialSpec::from_kappa_tilde(int L, double kappa_tilde_abs) {
  if (!(kappa_tilde_abs > 0.0)) throw DomainError("reduced curvature must be positive");
  return make(L, Curvature{-1.0}, 1.0 / kappa_tilde_abs);
}

double HyperbolicRadialSpec::handoff_rho() const {
  return std::min(std::sqrt(kHandoffT / kappa_tilde_abs()), kSeriesRhoCap);
}

HypergeometricParams hyperbolic_params(int L, double kappa_tilde_abs) {
  if (!(kappa_tilde_abs > 0.0)) throw DomainError("reduced curvature must be positive");
  const double c = L + 1.5;
  const double half = 0.5 * (L + 1);
  const double b_sq = 1.0 - 1.0 / kappa_tilde_abs;
  if (b_sq >= 0.0) {
    const double b = std::sqrt(b_sq);
    return HypergeometricParams::real(half - 0.5 * b, half + 0.5 * b, c);
  }
  return HypergeometricParams::conjugate({half, 0.5 * std::sqrt(-b_sq)}, c);
}

namespace {

template <typename T>
T series_value(const HyperbolicRadialSpec& spec, T rho) {
  if (rho < 0) throw DomainError("rho must be non-negative");
  const auto params = hyperbolic_params(spec.L, spec.kappa_tilde_abs());
  const T t = -static_cast<T>(spec.kappa_tilde_abs()) * rho * rho;
  return std::pow(rho, spec.L) * sum_2f1(params, t).value;
}

using State = std::array<long double, 2>;  // (R, dR/du), u = ln rho

// (1 + k~ rho^2) R_uu + (1 + 2 k~ rho^2) R_u + (rho^2 - L(L+1)) R = 0
State rhs(const State& y, long double u, long double kt, long double centrifugal) {
  const long double rho = std::exp(u);
  const long double x = kt * rho * rho;
  return {y[1], -((1 + 2 * x) * y[1] + (rho * rho - centrifugal) * y[0]) / (1 + x)};
}

State rk4_step(const State& y, long double u, long double du, long double kt, long double cf) {
  const auto axpy = [](const State& a, long double s, const State& b) {
    return State{a[0] + s * b[0], a[1] + s * b[1]};
  };
  const State k1 = rhs(y, u, kt, cf);
  const State k2 = rhs(axpy(y, du / 2, k1), u + du / 2, kt, cf);
  const State k3 = rhs(axpy(y, du / 2, k2), u + du / 2, kt, cf);
  const State k4 = rhs(axpy(y, du, k3), u + du, kt, cf);
  return {y[0] + du / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
          y[1] + du / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])};
}

// Node spacing depends only on the position, never on the target, so values at
// nearby targets share every step but the last one.
long double node_step(long double u, long double kt, long double centrifugal) {
  constexpr long double kPhase = 0.002L;
  const long double rho = std::exp(u);
  const long double omega =
      std::max({1.0L, std::sqrt(centrifugal), rho / std::sqrt(1 + kt * rho * rho)});
  return kPhase / omega;
}

}  // namespace

double hyperbolic_series(const HyperbolicRadialSpec& spec, double rho) {
  return series_value(spec, rho);
}

long double hyperbolic_series(const HyperbolicRadialSpec& spec, long double rho) {
  return series_value(spec, rho);
}

long double hyperbolic_continued(const HyperbolicRadialSpec& spec, long double start_rho,
                                 long double rho) {
  if (!(start_rho > 0) || rho < start_rho) {
    throw DomainError("continuation needs 0 < start_rho <= rho");
  }
  const long double kt = spec.kappa_tilde_abs();
  const long double cf = static_cast<long double>(spec.L) * (spec.L + 1);
  const auto params = hyperbolic_params(spec.L, spec.kappa_tilde_abs());
  const long double t = -kt * start_rho * start_rho;
  const long double lead = std::pow(start_rho, spec.L);
  const long double f = sum_2f1(params, t).value;
  const long double df = gauss_2f1_derivative(params, t);
  State y{lead * f, lead * (spec.L * f + 2 * t * df)};

  long double u = std::log(start_rho);
  const long double target = std::log(rho);
  while (true) {
    const long double du = node_step(u, kt, cf);
    if (u + du >= target) {
      y = rk4_step(y, u, target - u, kt, cf);
      break;
    }
    y = rk4_step(y, u, du, kt, cf);
    u += du;
  }
  if (!std::isfinite(y[0])) throw IntegrationError("hyperbolic continuation diverged");
  return y[0];
}

long double hyperbolic_radial(const HyperbolicRadialSpec& spec, long double rho) {
  const long double handoff = spec.handoff_rho();
  if (rho <= handoff) return series_value(spec, rho);
  return hyperbolic_continued(spec, handoff, rho);
}

double hyperbolic_radial(const HyperbolicRadialSpec& spec, double rho) {
  return static_cast<double>(hyperbolic_radial(spec, static_cast<long double>(rho)));
}

RadialFunction hyperbolic_profile(const HyperbolicRadialSpec& spec) {
  RadialFunction fn;
  const long double e = std::sqrt(static_cast<long double>(spec.energy_sq));
  const double k = spec.kappa.value();
  fn.eval = [spec, e, k](long double r) {
    return hyperbolic_radial(spec, e * detail::sin_k(k, r));
  };
  fn.lower = 0.0;
  fn.L = spec.L;
  fn.kappa = spec.kappa;
  return fn;
}

std::string hyperbolic_profile_csv(const HyperbolicRadialSpec& spec,
                                   const std::vector<double>& rhos) {
  report::CsvTable table({"rho", "value"});
  for (double rho : rhos) {
    table.add_row({report::format_number(rho),
                   report::format_number(hyperbolic_radial(spec, rho))});
  }
  return table.str();
}

}  // namespace curvedwave
