#include "curvedwave/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "curvedwave/hyperbolic_waves.hpp"
#include "curvedwave/ode_oracle.hpp"
#include "curvedwave/radial_polynomials.hpp"
#include "curvedwave/spectrum.hpp"
#include "curvedwave/sphere_quadrature.hpp"

namespace curvedwave {

Check Check::below(std::string name, double achieved, double bound) {
  return {std::move(name), achieved, bound, Comparison::below, achieved < bound};
}

Check Check::above(std::string name, double achieved, double bound) {
  return {std::move(name), achieved, bound, Comparison::above, achieved > bound};
}

Check Check::near(std::string name, double achieved, double target, double slack) {
  return {std::move(name), achieved, target, Comparison::near,
          std::abs(achieved - target) <= slack};
}

bool all_passed(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

nlohmann::json to_json(const Check& c) {
  static const char* names[] = {"below", "above", "near"};
  return {{"name", c.name},
          {"achieved", c.achieved},
          {"required", c.required},
          {"comparison", names[static_cast<int>(c.comparison)]},
          {"passed", c.passed}};
}

namespace {

std::vector<int> range(int lo, int hi) {
  std::vector<int> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

std::string tag(const char* what, int L) { return std::string(what) + " L=" + std::to_string(L); }

}  // namespace

std::vector<Check> verify_orthogonality(Curvature kappa, double rel_tol) {
  std::vector<Check> out;
  const auto ns = range(0, 13);
  for (int L : {0, 1, 3, 8}) {
    const Matrix gram = orthogonality_matrix(L, ns, kappa, rel_tol);
    double worst = 0.0;
    double smallest_diag = gram[0][0];
    for (std::size_t i = 0; i < ns.size(); ++i) {
      smallest_diag = std::min(smallest_diag, gram[i][i]);
      for (std::size_t j = i + 1; j < ns.size(); ++j) {
        worst = std::max(worst, std::abs(normalized_defect(gram, i, j)));
      }
    }
    out.push_back(Check::below(tag("gram off-diagonal", L), worst, 1e-10));
    out.push_back(Check::above(tag("gram diagonal", L), smallest_diag, 0.0));
  }
  if (kappa.is_spherical()) {
    struct Triple { int n1, n2, L; };
    for (const auto& [n1, n2, L] : {Triple{2, 2, 0}, Triple{1, 2, 1}, Triple{3, 4, 2}}) {
      const double r_route = half_sphere_overlap_r(n1, n2, L, kappa);
      const double s_route = half_sphere_overlap_s(n1, n2, L, kappa);
      const double rel = std::abs(r_route - s_route) / std::abs(r_route);
      out.push_back(Check::below("half-sphere s/r routes n1=" + std::to_string(n1) +
                                     " n2=" + std::to_string(n2) + " L=" + std::to_string(L),
                                 rel, 1e-10));
    }
  }
  return out;
}

std::vector<Check> verify_residuals(Curvature kappa) {
  std::vector<Check> out;
  for (const auto& level : enumerate_levels(6, kappa)) {
    const auto fn = radial_profile(level.n(), level.L, kappa);
    const auto grid = interior_grid(fn.lower, fn.upper, 101);
    const double res = radial_operator_residual(fn, level.energy_sq(), grid);
    out.push_back(Check::below("residual n=" + std::to_string(level.n()) +
                                   " L=" + std::to_string(level.L),
                               res, 1e-6));
  }
  const auto level = SphereLevel::from_degree(3, 2, kappa);
  const auto fn = radial_profile(3, 2, kappa);
  const auto grid = interior_grid(fn.lower, fn.upper, 101, 0.05);
  const double coarse = radial_operator_residual(fn, level.energy_sq(), grid, 1e-2);
  const double fine = radial_operator_residual(fn, level.energy_sq(), grid, 5e-3);
  out.push_back(Check::near("residual step-halving ratio n=3 L=2", coarse / fine, 4.0, 0.2));
  return out;
}

std::vector<Check> verify_shooting() {
  std::vector<Check> out;
  const Curvature unit{1.0};
  constexpr double lo = 0.5, hi = 50.0;
  for (int L = 0; L <= 3; ++L) {
    std::vector<double> expected;
    for (int N = std::max(L, 1); N <= 6; ++N) expected.push_back(N * (N + 2.0));
    const auto found = shoot_eigenvalues(L, unit, lo, hi, 100);
    out.push_back(Check::near(tag("shooting eigenvalue count", L),
                              static_cast<double>(found.size()),
                              static_cast<double>(expected.size()), 0.0));
    double worst = found.size() == expected.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; i < std::min(found.size(), expected.size()); ++i) {
      worst = std::max(worst, std::abs(found[i] - expected[i]) / expected[i]);
    }
    out.push_back(Check::below(tag("shooting relative error", L), worst, 1e-6));
  }
  const double scale = 2.5;
  const auto base = shoot_eigenvalues(0, unit, lo, hi, 100);
  const auto scaled = shoot_eigenvalues(0, Curvature{scale}, lo * scale, hi * scale, 100);
  double worst = base.size() == scaled.size() ? 0.0 : 1.0;
  for (std::size_t i = 0; i < std::min(base.size(), scaled.size()); ++i) {
    worst = std::max(worst, std::abs(scaled[i] / base[i] - scale) / scale);
  }
  out.push_back(Check::below("shooting curvature scaling k=2.5", worst, 1e-6));
  return out;
}

namespace {

// Series against continuation started at the inner edge of the band
// [0.75, 1] * |t_handoff| (0.6 < |t| < 0.8 when the handoff is not capped).
double overlap_defect(const HyperbolicRadialSpec& spec) {
  const long double outer = spec.handoff_rho();
  const long double inner = outer * std::sqrt(0.75L);
  long double worst = 0, scale = 0;
  constexpr int points = 8;
  for (int i = 1; i <= points; ++i) {
    const long double rho = inner + (outer - inner) * i / points;
    const long double series = hyperbolic_series(spec, rho);
    const long double marched = hyperbolic_continued(spec, inner, rho);
    worst = std::max(worst, std::abs(series - marched));
    scale = std::max(scale, std::abs(series));
  }
  return static_cast<double>(worst / scale);
}

double hyperbolic_residual(const HyperbolicRadialSpec& spec) {
  const auto fn = hyperbolic_profile(spec);
  const double e = std::sqrt(spec.energy_sq);
  const double root = std::sqrt(-spec.kappa.value());
  const double rho_h = spec.handoff_rho();
  std::vector<double> grid;
  constexpr int points = 24;
  for (int i = 0; i < points; ++i) {
    const double rho = rho_h * (0.25 + 2.75 * i / (points - 1));
    grid.push_back(std::asinh(root * rho / e) / root);
  }
  return radial_operator_residual(fn, spec.energy_sq, grid);
}

}  // namespace

std::vector<Check> verify_hyperbolic(int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_l(0, 8);
  std::uniform_real_distribution<double> pick_log(-3.0, 3.0);
  int terminating = 0, complex_products = 0, misclassified = 0, residual_over = 0;
  double largest_passing_kt = 0.0, smallest_failing_kt = std::numeric_limits<double>::infinity();
  double worst_overlap = 0.0, worst_residual = 0.0;
  for (int i = 0; i < samples; ++i) {
    const int L = pick_l(rng);
    const double kt = std::pow(10.0, pick_log(rng));
    const auto params = hyperbolic_params(L, kt);
    if (termination_degree(params)) ++terminating;
    if (params.conjugate_pair() != (kt < 1.0)) ++misclassified;
    for (int n = 0; n < 64; ++n) {
      const auto product = (params.a() + static_cast<double>(n)) * (params.b() + static_cast<double>(n));
      if (product.imag() != 0.0) {
        ++complex_products;
        break;
      }
    }
    const auto spec = HyperbolicRadialSpec::from_kappa_tilde(L, kt);
    worst_overlap = std::max(worst_overlap, overlap_defect(spec));
    const double residual = hyperbolic_residual(spec);
    worst_residual = std::max(worst_residual, residual);
    if (residual < 1e-6) {
      largest_passing_kt = std::max(largest_passing_kt, kt);
    } else {
      ++residual_over;
      smallest_failing_kt = std::min(smallest_failing_kt, kt);
    }
  }
  return {Check::below("hyperbolic terminating samples", terminating, 0.5),
          Check::below("hyperbolic conjugate-pair misclassified", misclassified, 0.5),
          Check::below("hyperbolic non-real coefficient products", complex_products, 0.5),
          Check::below("hyperbolic series/continuation overlap", worst_overlap, 1e-9),
          Check::below("hyperbolic operator residual", worst_residual, 1e-6),
          Check::below("hyperbolic samples with residual over bound", residual_over, 0.5),
          Check::above("hyperbolic largest passing |k~|", largest_passing_kt, 0.0),
          Check::above("hyperbolic smallest failing |k~|", smallest_failing_kt, 0.0)};
}

}  // namespace curvedwave
