#pragma once

// Radial polynomial families of the free particle on the 3-sphere.
//
// Type I:  R(s) = s^L P^f(s),                with P^f even of degree 2 n_r.
// Type II: R(s) = s^L sqrt(1 - k s^2) P^g(s), with P^g even of degree 2 n_r.
// Unified: R(r) = sin_k(r)^L Q_{n,L}(cos_k(r)), n = 2 n_r (I) or 2 n_r + 1 (II).
//
// Coefficients are exact rationals; Q_{n,L} has k-independent coefficients and
// is normalized so that Q_{n,L}(1) = 1.

#include <cmath>
#include <concepts>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "curvedwave/radial_function.hpp"

namespace curvedwave {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using WideFloat = boost::multiprecision::cpp_bin_float_50;

enum class PolynomialFamily { unified_q, type_I_in_s, type_II_in_s };

const char* to_string(PolynomialFamily f) noexcept;
PolynomialFamily polynomial_family_from_string(const std::string& s);

/// Immutable polynomial with exact coefficients (ascending powers) and the
/// quantum-number labels it was built for.
class RadialPolynomial {
 public:
  /// Validates degree, parity and (for unified_q) the value 1 at x = 1.
  RadialPolynomial(int degree, int L, std::vector<Rational> coeffs, PolynomialFamily family);

  int degree() const noexcept { return degree_; }
  int L() const noexcept { return L_; }
  PolynomialFamily family() const noexcept { return family_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// Horner evaluation on coefficients rounded once to T.
  template <std::floating_point T>
  T evaluate(T x) const {
    const auto& c = rounded<T>();
    T acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Rational evaluate_exact(const Rational& x) const;

  /// Long double Horner, redone in 50 digits when sum |c_j x^j| exceeds
  /// kWideThreshold (high degrees near x = +-1 cancel heavily).
  long double evaluate_guarded(long double x) const;
  static constexpr long double kWideThreshold = 1e4L;

  /// Exact coefficients of the derivative.
  std::vector<Rational> derivative_coefficients() const;

 private:
  template <std::floating_point T>
  const std::vector<T>& rounded() const {
    if constexpr (std::is_same_v<T, double>) {
      return as_double_;
    } else {
      return as_long_double_;
    }
  }

  int degree_;
  int L_;
  std::vector<Rational> coeffs_;
  PolynomialFamily family_;
  std::vector<double> as_double_;
  std::vector<long double> as_long_double_;
  std::vector<WideFloat> as_wide_;
};

/// Even-power coefficients f_0 = 1, f_2, f_4, ... of the type I series in s.
/// Stops at the first vanishing coefficient or after max_terms entries.
std::vector<Rational> type1_coefficients(int L, const Rational& kappa, const Rational& energy_sq,
                                         int max_terms = 64);

/// Even-power coefficients g_0 = 1, g_2, ... of the type II series in s.
std::vector<Rational> type2_coefficients(int L, const Rational& kappa, const Rational& energy_sq,
                                         int max_terms = 64);

/// P^f_{n_r,L}(s) at the quantized energy k (2n_r+L)(2n_r+L+2).
RadialPolynomial type1_polynomial(int n_r, int L, const Rational& kappa);
/// P^g_{n_r,L}(s) at the quantized energy k (2n_r+L+1)(2n_r+L+3).
RadialPolynomial type2_polynomial(int n_r, int L, const Rational& kappa);

/// Q_{n,L}(xi).
RadialPolynomial unified_q(int n, int L);

double eval_q(const RadialPolynomial& poly, double xi);

/// r -> sin_k(r)^L Q_{n,L}(cos_k(r)) on [0, pi/sqrt(k)].
RadialFunction radial_profile(int n, int L, Curvature kappa);

/// Gegenbauer C_n^alpha(xi) by the three-term recurrence (reference only).
double gegenbauer_reference(int n, double alpha, double xi);

/// Real roots in [lo, hi]: sign-change scan on `grid_points` samples, then
/// bisection to `tol`. Exact zeros on the grid are reported as roots.
std::vector<double> real_roots(const RadialPolynomial& poly, double lo, double hi,
                               int grid_points = 100'000, double tol = 1e-13);

/// {"n", "L", "family", "coeffs": [[num, den], ...]} with decimal-string integers.
nlohmann::json to_json(const RadialPolynomial& poly);
RadialPolynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace curvedwave
