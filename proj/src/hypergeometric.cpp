#include "curvedwave/hypergeometric.hpp"

#include <algorithm>

namespace curvedwave {

namespace {

bool is_nonpositive_integer(double x) {
  return x <= kIntegerTolerance && std::abs(x - std::round(x)) <= kIntegerTolerance;
}

}  // namespace

HypergeometricParams::HypergeometricParams(std::complex<double> a, std::complex<double> b,
                                           double c, bool conj)
    : a_(a), b_(b), c_(c), conjugate_pair_(conj) {
  if (!std::isfinite(c) || is_nonpositive_integer(c)) {
    throw DomainError("2F1: c must not be zero or a negative integer (c = " +
                      std::to_string(c) + ")");
  }
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(b.real()) ||
      !std::isfinite(b.imag())) {
    throw DomainError("2F1: parameters must be finite");
  }
}

HypergeometricParams HypergeometricParams::real(double a, double b, double c) {
  return HypergeometricParams({a, 0.0}, {b, 0.0}, c, false);
}

HypergeometricParams HypergeometricParams::conjugate(std::complex<double> a, double c) {
  if (a.imag() == 0.0) return real(a.real(), a.real(), c);
  return HypergeometricParams(a, std::conj(a), c, true);
}

HypergeometricParams HypergeometricParams::from_complex(std::complex<double> a,
                                                        std::complex<double> b, double c) {
  if (a.imag() == 0.0 && b.imag() == 0.0) return real(a.real(), b.real(), c);
  if (b == std::conj(a)) return conjugate(a, c);
  throw DomainError("2F1: complex parameters must form a conjugate pair");
}

HypergeometricParams HypergeometricParams::shifted() const {
  const std::complex<double> one{1.0, 0.0};
  return HypergeometricParams(a_ + one, b_ + one, c_ + 1.0, conjugate_pair_);
}

std::complex<double> pochhammer(std::complex<double> x, unsigned n) {
  std::complex<double> acc{1.0, 0.0};
  for (unsigned k = 0; k < n; ++k) acc *= x + static_cast<double>(k);
  return acc;
}

std::optional<int> termination_degree(const HypergeometricParams& p) {
  if (p.conjugate_pair()) return std::nullopt;
  std::optional<int> best;
  for (double x : {p.a().real(), p.b().real()}) {
    if (is_nonpositive_integer(x)) {
      const int n = static_cast<int>(-std::round(x));
      if (!best || n < *best) best = n;
    }
  }
  return best;
}

double gauss_2f1(const HypergeometricParams& p, double t) { return sum_2f1(p, t).value; }

long double gauss_2f1(const HypergeometricParams& p, long double t) {
  return sum_2f1(p, t).value;
}

namespace {

template <std::floating_point T>
T derivative_impl(const HypergeometricParams& p, T t) {
  const T prefactor = p.rising_product<T>(0) / static_cast<T>(p.c());
  if (prefactor == 0) return 0;
  return prefactor * sum_2f1(p.shifted(), t).value;
}

}  // namespace

double gauss_2f1_derivative(const HypergeometricParams& p, double t) {
  return derivative_impl(p, t);
}

long double gauss_2f1_derivative(const HypergeometricParams& p, long double t) {
  return derivative_impl(p, t);
}

std::vector<double> series_coefficients(const HypergeometricParams& p, std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  double coeff = 1.0;
  for (std::size_t n = 0; n < count; ++n) {
    out.push_back(coeff);
    coeff *= p.rising_product<double>(static_cast<std::int64_t>(n)) /
             ((p.c() + static_cast<double>(n)) * static_cast<double>(n + 1));
  }
  return out;
}

}  // namespace curvedwave
