#include "curvedwave/ode_oracle.hpp"

#include <array>
#include <cmath>
#include <string>

#include <boost/numeric/odeint.hpp>

namespace curvedwave {

double radial_operator_residual(const RadialFunction& fn, double energy_sq,
                                const std::vector<double>& grid, double h) {
  const long double step = h;
  const long double e2 = energy_sq;
  const long double centrifugal = static_cast<long double>(fn.L) * (fn.L + 1);
  const double k = fn.kappa.value();

  long double worst = 0, scale = 0;
  for (double r0 : grid) {
    const long double r = r0;
    const long double minus = fn.at(r - step);
    const long double centre = fn.at(r);
    const long double plus = fn.at(r + step);
    const long double d1 = (plus - minus) / (2 * step);
    const long double d2 = (plus - 2 * centre + minus) / (step * step);
    const long double s = detail::sin_k(k, r);
    const long double c = detail::cos_k(k, r);
    const long double res = d2 + 2 * (c / s) * d1 - centrifugal * centre / (s * s) + e2 * centre;
    worst = std::max(worst, std::abs(res));
    scale = std::max(scale, std::abs(e2 * centre));
  }
  return static_cast<double>(scale > 0 ? worst / scale : worst);
}

std::vector<double> interior_grid(double lower, double upper, int points, double margin) {
  std::vector<double> out;
  const double a = lower + margin;
  const double b = upper - margin;
  if (points < 1 || !(a < b)) throw DomainError("interior grid needs points >= 1 and room inside the margins");
  for (int i = 0; i < points; ++i) {
    out.push_back(points == 1 ? 0.5 * (a + b) : a + (b - a) * i / (points - 1.0));
  }
  return out;
}

namespace {

using State = std::array<double, 2>;

// Reduced function u = R / S^L obeys
//   u'' + 2(L+1)(C/S) u' + (E^2 - k L(L+2)) u = 0,
// whose regular solution is analytic in S^2 at either pole.
struct ReducedRadial {
  int L;
  double kappa;
  double energy_sq;

  void operator()(const State& y, State& dydr, double r) const {
    const double s = sin_k(Curvature{kappa}, r);
    const double c = cos_k(Curvature{kappa}, r);
    dydr[0] = y[1];
    dydr[1] = -2.0 * (L + 1) * (c / s) * y[1] - (energy_sq - kappa * L * (L + 2.0)) * y[0];
  }
};

// Two-term regular series u = 1 + f2 S^2, valid at either pole.
State launch(const ReducedRadial& sys, double r) {
  const double f2 = (sys.kappa * sys.L * (sys.L + 2.0) - sys.energy_sq) / (2.0 * (2 * sys.L + 3));
  const double s = sin_k(Curvature{sys.kappa}, r);
  const double c = cos_k(Curvature{sys.kappa}, r);
  return {1.0 + f2 * s * s, 2.0 * f2 * s * c};
}

State integrate(const ReducedRadial& sys, double from, double to, double rel_tol) {
  namespace odeint = boost::numeric::odeint;
  State y = launch(sys, from);
  auto stepper = odeint::make_controlled(rel_tol, rel_tol, odeint::runge_kutta_dopri5<State>());
  const double dt0 = 0.1 * std::abs(to - from) * 1e-6 * (to > from ? 1.0 : -1.0);
  odeint::integrate_adaptive(stepper, sys, y, from, to, dt0);
  if (!std::isfinite(y[0]) || !std::isfinite(y[1])) {
    throw IntegrationError("radial shooting produced a non-finite state at E^2 = " +
                           std::to_string(sys.energy_sq));
  }
  return y;
}

}  // namespace

double wronskian_mismatch(int L, Curvature kappa, double energy_sq, const ShootingOptions& opts) {
  if (!kappa.is_spherical()) throw DomainError("shooting requires positive curvature");
  const ReducedRadial sys{L, kappa.value(), energy_sq};
  const double eps = opts.start_fraction * kappa.antipode();
  const double mid = kappa.equator();
  const State north = integrate(sys, eps, mid, opts.rel_tol);
  const State south = integrate(sys, kappa.antipode() - eps, mid, opts.rel_tol);
  return north[0] * south[1] - north[1] * south[0];
}

std::vector<double> shoot_eigenvalues(int L, Curvature kappa, double lo, double hi, int count,
                                      const ShootingOptions& opts) {
  if (!(lo > 0.0) || !(hi > lo)) throw DomainError("shooting window must be positive and ordered");
  std::vector<double> found;
  double e_prev = lo;
  double w_prev = wronskian_mismatch(L, kappa, e_prev, opts);
  const int steps = static_cast<int>(std::ceil((hi - lo) / opts.scan_step));
  for (int i = 1; i <= steps && static_cast<int>(found.size()) < count; ++i) {
    const double e = (i == steps) ? hi : lo + opts.scan_step * i;
    const double w = wronskian_mismatch(L, kappa, e, opts);
    if (std::signbit(w) != std::signbit(w_prev) || w == 0.0) {
      double a = e_prev, b = e, wa = w_prev;
      while (b - a > opts.bisect_rel_tol * b) {
        const double m = 0.5 * (a + b);
        const double wm = wronskian_mismatch(L, kappa, m, opts);
        if (wm == 0.0) {
          a = b = m;
          break;
        }
        if (std::signbit(wm) == std::signbit(wa)) {
          a = m;
          wa = wm;
        } else {
          b = m;
        }
      }
      const double root = 0.5 * (a + b);
      if (root > lo && root < hi) found.push_back(root);
    }
    e_prev = e;
    w_prev = w;
  }
  if (found.empty()) {
    throw NoEigenvalueError("no eigenvalue for L = " + std::to_string(L) + " in (" +
                            std::to_string(lo) + ", " + std::to_string(hi) + ")");
  }
  return found;
}

}  // namespace curvedwave
