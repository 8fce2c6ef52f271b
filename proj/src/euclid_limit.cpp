#include "curvedwave/euclid_limit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>

#include "curvedwave/radial_polynomials.hpp"
#include "curvedwave/report.hpp"

namespace curvedwave {

double spherical_bessel_j(int L, double x) {
  if (L < 0 || !(x >= 0.0)) throw DomainError("spherical_bessel_j needs L >= 0 and x >= 0");
  return detail::spherical_bessel_j(L, x);
}

long double spherical_bessel_j(int L, long double x) {
  if (L < 0 || !(x >= 0.0L)) throw DomainError("spherical_bessel_j needs L >= 0 and x >= 0");
  return detail::spherical_bessel_j(L, x);
}

RadialFunction bessel_profile(int L, double k) {
  RadialFunction fn;
  const long double wave = k;
  fn.eval = [L, wave](long double r) { return detail::spherical_bessel_j(L, wave * r); };
  fn.lower = 0.0;
  fn.upper = std::numeric_limits<double>::infinity();
  fn.L = L;
  fn.kappa = Curvature{0.0};
  return fn;
}

double limit_curvature(int n, int L, double k) {
  const double big_n = n + L;
  if (!(big_n > 0.0)) throw DomainError("limit_curvature needs n + L > 0");
  return k * k / (big_n * (big_n + 2.0));
}

RadialFunction contracted_profile(int n, int L, double k) {
  if (n < 0 || L < 0 || !(k > 0.0)) throw DomainError("contracted_profile: bad arguments");
  RadialFunction fn;
  fn.L = L;
  fn.lower = 0.0;
  if (n + L == 0) {
    fn.eval = [](long double) { return 1.0L; };
    fn.upper = std::numeric_limits<double>::infinity();
    fn.kappa = Curvature{0.0};
    return fn;
  }
  const Curvature kappa{limit_curvature(n, L, k)};
  long double prefactor = 1;
  for (int m = 1; m <= L; ++m) prefactor *= static_cast<long double>(k) / (2 * m + 1);
  auto q = std::make_shared<const RadialPolynomial>(unified_q(n, L));
  const double kv = kappa.value();
  fn.eval = [q, kv, L, prefactor](long double r) {
    return prefactor * std::pow(detail::sin_k(kv, r), L) * q->evaluate_guarded(detail::cos_k(kv, r));
  };
  fn.upper = kappa.equator();
  fn.kappa = kappa;
  return fn;
}

double LimitSequenceSpec::hemisphere_limit() const {
  double limit = std::numeric_limits<double>::infinity();
  for (int n : n_values) {
    limit = std::min(limit, Curvature{limit_curvature(n, L, k)}.equator());
  }
  return limit;
}

void LimitSequenceSpec::validate() const {
  if (L < 0 || !(k > 0.0)) throw DomainError("limit sequence needs L >= 0 and k > 0");
  if (n_values.empty()) throw DomainError("limit sequence needs at least one n");
  for (int n : n_values) {
    if (n < 0 || n + L == 0) {
      throw DomainError("limit sequence member n = " + std::to_string(n) +
                        " has no positive curvature");
    }
  }
  if (!(r_max > 0.0)) throw DomainError("r_max must be positive");
  const double limit = hemisphere_limit();
  if (!(r_max < limit)) {
    throw DomainError("r_max = " + std::to_string(r_max) +
                      " exceeds the upper hemisphere of a member (limit " +
                      std::to_string(limit) + ")");
  }
}

ConvergenceReport convergence_report(const LimitSequenceSpec& spec, int grid_points) {
  spec.validate();
  ConvergenceReport out;
  out.spec = spec;
  const auto reference = bessel_profile(spec.L, spec.k);
  for (int n : spec.n_values) {
    const auto member = contracted_profile(n, spec.L, spec.k);
    double sup = 0.0;
    for (int i = 0; i < grid_points; ++i) {
      const long double r = spec.r_max * static_cast<long double>(i) / (grid_points - 1);
      sup = std::max(sup, static_cast<double>(std::abs(member.at(r) - reference.at(r))));
    }
    out.entries.push_back({n, member.kappa.value(), sup});
  }
  out.strictly_decreasing = true;
  for (std::size_t i = 1; i < out.entries.size(); ++i) {
    if (!(out.entries[i].sup_distance < out.entries[i - 1].sup_distance)) {
      out.strictly_decreasing = false;
    }
  }
  return out;
}

std::string convergence_csv(const ConvergenceReport& rep) {
  report::CsvTable table({"L", "k", "n", "kappa_n", "sup_distance"});
  for (const auto& e : rep.entries) {
    table.add_row({report::format_number(rep.spec.L), report::format_number(rep.spec.k),
                   report::format_number(e.n), report::format_number(e.kappa_n),
                   report::format_number(e.sup_distance)});
  }
  return table.str();
}

}  // namespace curvedwave
