#include "curvedwave/radial_polynomials.hpp"

#include <memory>
#include <string>

namespace curvedwave {

namespace {

Rational quantized_energy(int N) { return Rational(N) * Rational(N + 2); }

// Coefficients of the shared three-step recursion
//   c_{2m+2} = [k (L+2m+shift)(L+2m+shift+2) - E^2] / ((2m+2)(2L+2m+3)) c_{2m},
// shift = 0 for type I and 1 for type II.
std::vector<Rational> even_series(int L, int shift, const Rational& kappa,
                                  const Rational& energy_sq, int max_terms) {
  std::vector<Rational> out;
  if (max_terms < 1) return out;
  out.emplace_back(1);
  for (int m = 0; static_cast<int>(out.size()) < max_terms; ++m) {
    const Rational factor = kappa * Rational(L + 2 * m + shift) * Rational(L + 2 * m + shift + 2) -
                            energy_sq;
    if (factor == 0) break;
    out.push_back(out.back() * factor / (Rational(2 * m + 2) * Rational(2 * L + 2 * m + 3)));
  }
  return out;
}

std::vector<Rational> spread_even(const std::vector<Rational>& even) {
  std::vector<Rational> out(2 * even.size() - 1, Rational(0));
  for (std::size_t m = 0; m < even.size(); ++m) out[2 * m] = even[m];
  return out;
}

// sum_m c_m (1 - xi^2)^m as ascending coefficients in xi.
std::vector<Rational> substitute_one_minus_square(const std::vector<Rational>& c) {
  const std::size_t top = c.size() - 1;
  std::vector<Rational> out(2 * top + 1, Rational(0));
  for (std::size_t m = 0; m <= top; ++m) {
    BigInt binom = 1;
    for (std::size_t j = 0; j <= m; ++j) {
      const Rational term = c[m] * Rational(binom);
      out[2 * j] += (j % 2 == 0) ? term : Rational(-term);
      binom = binom * BigInt(m - j) / BigInt(j + 1);
    }
  }
  return out;
}

}  // namespace

const char* to_string(PolynomialFamily f) noexcept {
  switch (f) {
    case PolynomialFamily::unified_q:
      return "unified_Q";
    case PolynomialFamily::type_I_in_s:
      return "type_I_in_s";
    case PolynomialFamily::type_II_in_s:
      return "type_II_in_s";
  }
  return "unknown";
}

PolynomialFamily polynomial_family_from_string(const std::string& s) {
  if (s == "unified_Q") return PolynomialFamily::unified_q;
  if (s == "type_I_in_s") return PolynomialFamily::type_I_in_s;
  if (s == "type_II_in_s") return PolynomialFamily::type_II_in_s;
  throw DomainError("unknown polynomial family '" + s + "'");
}

RadialPolynomial::RadialPolynomial(int degree, int L, std::vector<Rational> coeffs,
                                   PolynomialFamily family)
    : degree_(degree), L_(L), coeffs_(std::move(coeffs)), family_(family) {
  if (degree_ < 0 || L_ < 0) throw DomainError("polynomial labels must be non-negative");
  if (static_cast<int>(coeffs_.size()) != degree_ + 1 || coeffs_.back() == 0) {
    throw DomainError("polynomial must have exactly degree + 1 coefficients, leading one nonzero");
  }
  for (int j = 0; j <= degree_; ++j) {
    if ((j - degree_) % 2 != 0 && coeffs_[j] != 0) {
      throw DomainError("polynomial coefficients must share the parity of the degree");
    }
  }
  if (family_ == PolynomialFamily::unified_q && evaluate_exact(Rational(1)) != 1) {
    throw DomainError("Q polynomial must equal 1 at xi = 1");
  }
  as_double_.reserve(coeffs_.size());
  as_long_double_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    as_double_.push_back(c.convert_to<double>());
    as_long_double_.push_back(c.convert_to<long double>());
    as_wide_.push_back(c.convert_to<WideFloat>());
  }
}

long double RadialPolynomial::evaluate_guarded(long double x) const {
  long double acc = 0, magnitude = 0;
  const long double ax = std::abs(x);
  for (auto it = as_long_double_.rbegin(); it != as_long_double_.rend(); ++it) {
    acc = acc * x + *it;
    magnitude = magnitude * ax + std::abs(*it);
  }
  if (magnitude <= kWideThreshold) return acc;
  const WideFloat wx = x;
  WideFloat wide = 0;
  for (auto it = as_wide_.rbegin(); it != as_wide_.rend(); ++it) wide = wide * wx + *it;
  return wide.convert_to<long double>();
}

Rational RadialPolynomial::evaluate_exact(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rational> RadialPolynomial::derivative_coefficients() const {
  std::vector<Rational> out;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) out.push_back(coeffs_[j] * Rational(j));
  return out;
}

std::vector<Rational> type1_coefficients(int L, const Rational& kappa, const Rational& energy_sq,
                                         int max_terms) {
  return even_series(L, 0, kappa, energy_sq, max_terms);
}

std::vector<Rational> type2_coefficients(int L, const Rational& kappa, const Rational& energy_sq,
                                         int max_terms) {
  return even_series(L, 1, kappa, energy_sq, max_terms);
}

RadialPolynomial type1_polynomial(int n_r, int L, const Rational& kappa) {
  if (n_r < 0 || L < 0) throw DomainError("quantum numbers must be non-negative");
  const auto even = type1_coefficients(L, kappa, kappa * quantized_energy(2 * n_r + L), n_r + 2);
  return RadialPolynomial(2 * n_r, L, spread_even(even), PolynomialFamily::type_I_in_s);
}

RadialPolynomial type2_polynomial(int n_r, int L, const Rational& kappa) {
  if (n_r < 0 || L < 0) throw DomainError("quantum numbers must be non-negative");
  const auto even =
      type2_coefficients(L, kappa, kappa * quantized_energy(2 * n_r + L + 1), n_r + 2);
  return RadialPolynomial(2 * n_r, L, spread_even(even), PolynomialFamily::type_II_in_s);
}

RadialPolynomial unified_q(int n, int L) {
  if (n < 0 || L < 0) throw DomainError("unified_q: n and L must be non-negative");
  const int n_r = n / 2;
  const Rational energy_sq = quantized_energy(n + L);
  // With k = 1 the s^{2m} coefficient is a k-independent number times k^m,
  // so k s^2 -> 1 - xi^2 gives k-independent coefficients in xi.
  std::vector<Rational> coeffs;
  if (n % 2 == 0) {
    coeffs = substitute_one_minus_square(type1_coefficients(L, Rational(1), energy_sq, n_r + 1));
  } else {
    // sqrt(1 - k s^2) = xi on the upper hemisphere.
    const auto even =
        substitute_one_minus_square(type2_coefficients(L, Rational(1), energy_sq, n_r + 1));
    coeffs.assign(even.size() + 1, Rational(0));
    for (std::size_t j = 0; j < even.size(); ++j) coeffs[j + 1] = even[j];
  }
  Rational at_pole = 0;
  for (const auto& c : coeffs) at_pole += c;
  for (auto& c : coeffs) c /= at_pole;
  return RadialPolynomial(n, L, std::move(coeffs), PolynomialFamily::unified_q);
}

double eval_q(const RadialPolynomial& poly, double xi) {
  return static_cast<double>(poly.evaluate_guarded(xi));
}

RadialFunction radial_profile(int n, int L, Curvature kappa) {
  if (!kappa.is_spherical()) throw DomainError("radial_profile requires positive curvature");
  const double k = kappa.value();
  auto q = std::make_shared<const RadialPolynomial>(unified_q(n, L));
  RadialFunction fn;
  fn.eval = [q, k, L](long double r) {
    const long double s = detail::sin_k(k, r);
    return std::pow(s, L) * q->evaluate_guarded(detail::cos_k(k, r));
  };
  fn.lower = 0.0;
  fn.upper = kappa.antipode();
  fn.L = L;
  fn.kappa = kappa;
  return fn;
}

double gegenbauer_reference(int n, double alpha, double xi) {
  if (n < 0) throw DomainError("gegenbauer_reference: n must be non-negative");
  double prev = 1.0;
  if (n == 0) return prev;
  double curr = 2.0 * alpha * xi;
  for (int m = 2; m <= n; ++m) {
    const double next = (2.0 * xi * (m + alpha - 1.0) * curr - (m + 2.0 * alpha - 2.0) * prev) / m;
    prev = curr;
    curr = next;
  }
  return curr;
}

std::vector<double> real_roots(const RadialPolynomial& poly, double lo, double hi,
                               int grid_points, double tol) {
  std::vector<double> roots;
  const auto at = [&](int i) {
    return i == grid_points - 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / (grid_points - 1);
  };
  double x_prev = at(0);
  double f_prev = poly.evaluate(x_prev);
  if (f_prev == 0.0) roots.push_back(x_prev);
  for (int i = 1; i < grid_points; ++i) {
    const double x = at(i);
    const double f = poly.evaluate(x);
    if (f == 0.0) {
      roots.push_back(x);
    } else if (f_prev != 0.0 && std::signbit(f) != std::signbit(f_prev)) {
      double a = x_prev, b = x;
      double fa = f_prev;
      while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        const double fm = poly.evaluate(mid);
        if (fm == 0.0) {
          a = b = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(fa)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      roots.push_back(0.5 * (a + b));
    }
    x_prev = x;
    f_prev = f;
  }
  return roots;
}

nlohmann::json to_json(const RadialPolynomial& poly) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : poly.coefficients()) {
    coeffs.push_back({numerator(c).str(), denominator(c).str()});
  }
  return {{"n", poly.degree()},
          {"L", poly.L()},
          {"family", to_string(poly.family())},
          {"coeffs", std::move(coeffs)}};
}

RadialPolynomial polynomial_from_json(const nlohmann::json& j) {
  std::vector<Rational> coeffs;
  for (const auto& pair : j.at("coeffs")) {
    coeffs.emplace_back(BigInt(pair.at(0).get<std::string>()),
                        BigInt(pair.at(1).get<std::string>()));
  }
  const auto family = j.contains("family")
                          ? polynomial_family_from_string(j.at("family").get<std::string>())
                          : PolynomialFamily::unified_q;
  return RadialPolynomial(j.at("n").get<int>(), j.at("L").get<int>(), std::move(coeffs), family);
}

}  // namespace curvedwave
