#pragma once

// Gauss hypergeometric series 2F1(a, b; c; t) by direct forward summation.
//
// Supported parameter shapes are a real pair (a, b) and a complex-conjugate
// pair b = conj(a). In both cases (a + n)(b + n) is real, so every partial sum
// is accumulated in real arithmetic and the result is real.

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "curvedwave/errors.hpp"

namespace curvedwave {

class HypergeometricParams {
 public:
  /// Real (a, b).
  static HypergeometricParams real(double a, double b, double c);
  /// b = conj(a). Falls back to a real pair when imag(a) == 0.
  static HypergeometricParams conjugate(std::complex<double> a, double c);
  /// Classifies (a, b) as real or conjugate; anything else is a DomainError.
  static HypergeometricParams from_complex(std::complex<double> a, std::complex<double> b,
                                           double c);

  std::complex<double> a() const noexcept { return a_; }
  std::complex<double> b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  bool conjugate_pair() const noexcept { return conjugate_pair_; }

  /// (a + n)(b + n), evaluated without complex arithmetic.
  template <std::floating_point T>
  T rising_product(std::int64_t n) const {
    const T shift = static_cast<T>(n);
    if (conjugate_pair_) {
      const T re = static_cast<T>(a_.real()) + shift;
      const T im = static_cast<T>(a_.imag());
      return re * re + im * im;
    }
    return (static_cast<T>(a_.real()) + shift) * (static_cast<T>(b_.real()) + shift);
  }

  /// Parameters of d/dt 2F1, i.e. (a+1, b+1; c+1).
  HypergeometricParams shifted() const;

 private:
  HypergeometricParams(std::complex<double> a, std::complex<double> b, double c, bool conj);

  std::complex<double> a_;
  std::complex<double> b_;
  double c_;
  bool conjugate_pair_;
};

/// Tolerance used when deciding that a real parameter is a non-positive integer.
inline constexpr double kIntegerTolerance = 1e-9;
/// Relative truncation tolerance of the double-precision series.
inline constexpr double kSeriesTolerance = 1e-15;
inline constexpr std::int64_t kMaxSeriesTerms = 1'000'000;

/// Rising factorial x (x+1) ... (x+n-1).
std::complex<double> pochhammer(std::complex<double> x, unsigned n);

/// Smallest n_r with a = -n_r or b = -n_r, if any.
std::optional<int> termination_degree(const HypergeometricParams& p);

template <std::floating_point T>
struct SeriesSum {
  T value = 0;
  T abs_sum = 0;  // sum of |term|, a cancellation indicator
  std::int64_t terms = 0;
};

template <std::floating_point T>
SeriesSum<T> sum_2f1(const HypergeometricParams& p, T t) {
  const auto degree = termination_degree(p);
  if (!degree && !(std::abs(t) < 1)) {
    throw DomainError("2F1 series diverges for |t| >= 1 (t = " +
                      std::to_string(static_cast<double>(t)) + ")");
  }
  // Extended-precision callers difference the result at tiny steps, so they
  // need truncation at their own epsilon.
  const T tol = std::is_same_v<T, double> ? static_cast<T>(kSeriesTolerance)
                                          : std::numeric_limits<T>::epsilon();
  const T c = static_cast<T>(p.c());
  const T tail_factor = degree ? T(1) : 1 / (1 - std::abs(t));

  SeriesSum<T> out;
  T term = 1;
  out.value = 1;
  out.abs_sum = 1;
  out.terms = 1;
  for (std::int64_t n = 0; n < kMaxSeriesTerms; ++n) {
    if (degree && n >= *degree) return out;
    const T ratio = p.rising_product<T>(n) * t / ((c + static_cast<T>(n)) * static_cast<T>(n + 1));
    term *= ratio;
    out.value += term;
    out.abs_sum += std::abs(term);
    ++out.terms;
    if (term == 0) return out;
    if (!degree && std::abs(ratio) < 1 &&
        std::abs(term) * tail_factor <= tol * std::abs(out.value)) {
      return out;
    }
  }
  throw ConvergenceError("2F1 series did not converge within the term cap",
                         static_cast<double>(out.value));
}

/// 2F1(a, b; c; t). Any t when the series terminates, |t| < 1 otherwise.
double gauss_2f1(const HypergeometricParams& p, double t);
long double gauss_2f1(const HypergeometricParams& p, long double t);

/// d/dt 2F1(a, b; c; t) = (ab/c) 2F1(a+1, b+1; c+1; t).
double gauss_2f1_derivative(const HypergeometricParams& p, double t);
long double gauss_2f1_derivative(const HypergeometricParams& p, long double t);

/// Coefficients (a)_n (b)_n / ((c)_n n!) of t^n for n < count, in real arithmetic.
std::vector<double> series_coefficients(const HypergeometricParams& p, std::size_t count);

}  // namespace curvedwave
