#include "curvedwave/sphere_quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "curvedwave/report.hpp"

namespace curvedwave {

namespace {

constexpr int kOrder = 32;

struct GaussRule {
  std::array<double, kOrder> nodes;
  std::array<double, kOrder> weights;
};

// Nodes and weights on [-1, 1] by Newton iteration on P_32.
GaussRule make_rule() {
  GaussRule rule{};
  for (int i = 0; i < kOrder; ++i) {
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (kOrder + 0.5L));
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= kOrder; ++k) {
        const long double pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = kOrder * (x * p1 - p0) / (x * x - 1);
      const long double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-19L) break;
    }
    rule.nodes[i] = static_cast<double>(x);
    rule.weights[i] = static_cast<double>(2 / ((1 - x * x) * dp * dp));
  }
  return rule;
}

const GaussRule& rule() {
  static const GaussRule r = make_rule();
  return r;
}

struct PanelSum {
  double value = 0.0;
  double abs_value = 0.0;
};

PanelSum panels(const std::function<double(double)>& f, double a, double b, long count) {
  const auto& g = rule();
  const double width = (b - a) / static_cast<double>(count);
  PanelSum out;
  for (long p = 0; p < count; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const double mid = lo + 0.5 * width;
    double sum = 0.0, abs_sum = 0.0;
    for (int i = 0; i < kOrder; ++i) {
      const double v = g.weights[i] * f(mid + 0.5 * width * g.nodes[i]);
      sum += v;
      abs_sum += std::abs(v);
    }
    out.value += 0.5 * width * sum;
    out.abs_value += 0.5 * width * abs_sum;
  }
  return out;
}

}  // namespace

double integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                const QuadratureOptions& opts) {
  PanelSum coarse = panels(f, a, b, 1);
  for (int level = 1; level <= opts.max_level; ++level) {
    const PanelSum fine = panels(f, a, b, 1L << level);
    // Roundoff limits what agreement is attainable for integrals that cancel.
    const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() * fine.abs_value;
    const double allowed =
        std::max({opts.rel_tol * std::abs(fine.value), opts.abs_floor, roundoff});
    if (std::abs(fine.value - coarse.value) <= allowed) return fine.value;
    coarse = fine;
  }
  throw ConvergenceError("Gauss-Legendre refinement did not meet tolerance", coarse.value);
}

double integrate_radial(const std::function<double(double)>& fn, Curvature kappa, double rel_tol,
                        RadialSpan span) {
  if (!kappa.is_spherical()) throw DomainError("integrate_radial requires positive curvature");
  const double upper = span == RadialSpan::whole_sphere ? kappa.antipode() : kappa.equator();
  const auto integrand = [&](double r) {
    const double s = sin_k(kappa, r);
    return fn(r) * s * s;
  };
  QuadratureOptions opts;
  opts.rel_tol = rel_tol;
  return integrate_gauss_legendre(integrand, 0.0, upper, opts);
}

Matrix orthogonality_matrix(int L, const std::vector<int>& ns, Curvature kappa, double rel_tol) {
  std::vector<RadialFunction> profiles;
  profiles.reserve(ns.size());
  for (int n : ns) profiles.push_back(radial_profile(n, L, kappa));

  Matrix gram(ns.size(), std::vector<double>(ns.size(), 0.0));
  for (std::size_t i = 0; i < ns.size(); ++i) {
    for (std::size_t j = i; j < ns.size(); ++j) {
      const auto& fi = profiles[i];
      const auto& fj = profiles[j];
      gram[i][j] = integrate_radial(
          [&](double r) { return static_cast<double>(fi.eval(r) * fj.eval(r)); }, kappa, rel_tol);
      gram[j][i] = gram[i][j];
    }
  }
  return gram;
}

double normalized_defect(const Matrix& gram, std::size_t i, std::size_t j) {
  const double scaled = gram[i][j] / std::sqrt(gram[i][i] * gram[j][j]);
  return i == j ? scaled - 1.0 : scaled;
}

std::string orthogonality_csv(int L, const std::vector<int>& ns, const Matrix& gram) {
  report::CsvTable table({"L", "n_i", "n_j", "gram_value", "normalized_defect"});
  for (std::size_t i = 0; i < ns.size(); ++i) {
    for (std::size_t j = i; j < ns.size(); ++j) {
      table.add_row({report::format_number(L), report::format_number(ns[i]),
                     report::format_number(ns[j]), report::format_number(gram[i][j]),
                     report::format_number(normalized_defect(gram, i, j))});
    }
  }
  return table.str();
}

double SturmLiouvilleForm::p(double s) const {
  const double w = 1.0 - kappa * s * s;
  const double base = std::pow(s, 2 * L + 2);
  return family == SturmLiouvilleFamily::f ? base * std::sqrt(w) : base * w * std::sqrt(w);
}

double SturmLiouvilleForm::dp(double s) const {
  const double w = 1.0 - kappa * s * s;
  const double lead = (2.0 * L + 2.0) * std::pow(s, 2 * L + 1);
  const double tail = kappa * std::pow(s, 2 * L + 3);
  if (family == SturmLiouvilleFamily::f) return lead * std::sqrt(w) - tail / std::sqrt(w);
  return lead * w * std::sqrt(w) - 3.0 * tail * std::sqrt(w);
}

double SturmLiouvilleForm::q(double s) const {
  const double w = 1.0 - kappa * s * s;
  const double base = std::pow(s, 2 * L + 2);
  return family == SturmLiouvilleFamily::f ? base / std::sqrt(w) : base * std::sqrt(w);
}

double SturmLiouvilleForm::lambda(double energy_sq) const {
  return family == SturmLiouvilleFamily::f ? energy_sq - kappa * L * (L + 2.0)
                                           : energy_sq - kappa * (L + 1.0) * (L + 3.0);
}

double sl_residual(SturmLiouvilleFamily family, int L, Curvature kappa, double energy_sq,
                   const RadialPolynomial& poly_in_s, int grid_points) {
  if (!kappa.is_spherical()) throw DomainError("sl_residual requires positive curvature");
  const SturmLiouvilleForm form{family, L, kappa.value()};
  const double lambda = form.lambda(energy_sq);

  const auto d1 = poly_in_s.derivative_coefficients();
  std::vector<double> c1, c2;
  for (const auto& c : d1) c1.push_back(c.convert_to<double>());
  for (std::size_t j = 1; j < d1.size(); ++j) c2.push_back((d1[j] * Rational(j)).convert_to<double>());
  const auto horner = [](const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };

  const double s_max = 1.0 / std::sqrt(kappa.value());
  double worst = 0.0, scale = 0.0;
  for (int i = 1; i <= grid_points; ++i) {
    const double s = s_max * i / (grid_points + 1.0);
    const double y = poly_in_s.evaluate(s);
    const double source = lambda * form.q(s) * y;
    const double res = form.dp(s) * horner(c1, s) + form.p(s) * horner(c2, s) + source;
    worst = std::max(worst, std::abs(res));
    scale = std::max(scale, std::abs(source));
  }
  return scale > 0.0 ? worst / scale : worst;
}

double half_sphere_overlap_r(int n1, int n2, int L, Curvature kappa) {
  const auto f1 = radial_profile(n1, L, kappa);
  const auto f2 = radial_profile(n2, L, kappa);
  return integrate_radial([&](double r) { return static_cast<double>(f1.eval(r) * f2.eval(r)); },
                          kappa, 1e-14, RadialSpan::upper_hemisphere);
}

double half_sphere_overlap_s(int n1, int n2, int L, Curvature kappa) {
  if (!kappa.is_spherical()) throw DomainError("half_sphere_overlap_s requires positive curvature");
  const Rational k_exact(kappa.value());
  const auto make = [&](int n) {
    return n % 2 == 0 ? type1_polynomial(n / 2, L, k_exact) : type2_polynomial(n / 2, L, k_exact);
  };
  const auto p1 = make(n1);
  const auto p2 = make(n2);
  const double k = kappa.value();
  const double b = 1.0 / std::sqrt(k);

  // xc is the signed distance to the nearest endpoint; near s = b it is b - s,
  // which gives 1 - k s^2 = k (b - s)(b + s) without cancellation.
  const auto integrand = [&](double s, double xc) {
    const double w = (xc > 0.0) ? k * xc * (b + s) : 1.0 - k * s * s;
    if (w <= 0.0) return 0.0;
    double y1 = p1.evaluate(s), y2 = p2.evaluate(s);
    if (n1 % 2) y1 *= std::sqrt(w);
    if (n2 % 2) y2 *= std::sqrt(w);
    return y1 * y2 * std::pow(s, 2 * L + 2) / std::sqrt(w);
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(integrand, 0.0, b, 1e-14);
}

}  // namespace curvedwave
