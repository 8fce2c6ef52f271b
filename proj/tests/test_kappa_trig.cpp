#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "curvedwave/kappa_trig.hpp"

using namespace curvedwave;
using std::numbers::pi;

namespace {

// cosh from its power series; independent of the library's exp-based path.
double cosh_series(double x) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    term *= x * x / ((2.0 * k - 1) * (2.0 * k));
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("curvature classification") {
  CHECK(Curvature{2.0}.geometry() == Geometry::spherical);
  CHECK(Curvature{0.0}.geometry() == Geometry::flat);
  CHECK(Curvature{-0.5}.geometry() == Geometry::hyperbolic);
  CHECK(Curvature{-0.0}.geometry() == Geometry::flat);
  CHECK_THROWS_AS(Curvature{std::nan("")}, DomainError);
  CHECK_THROWS_AS(Curvature{std::numeric_limits<double>::infinity()}, DomainError);
  CHECK(Curvature{4.0}.antipode() == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(Curvature{4.0}.equator() == doctest::Approx(pi / 4).epsilon(1e-15));
}

TEST_CASE("cos_k examples") {
  CHECK(cos_k(Curvature{0.0}, 5.0) == 1.0);
  CHECK(std::abs(cos_k(Curvature{1.0}, pi / 2)) < 1e-16);
  CHECK(cos_k(Curvature{-1.0}, 1.0) == doctest::Approx(cosh_series(1.0)).epsilon(1e-15));
  CHECK(cos_k(Curvature{-1.0}, 1.0) == doctest::Approx(1.5430806348152437).epsilon(1e-15));
}

TEST_CASE("sin_k examples") {
  CHECK(sin_k(Curvature{0.0}, 3.25) == 3.25);
  CHECK(sin_k(Curvature{1.0}, pi / 2) == doctest::Approx(1.0).epsilon(1e-16));
  // h - 4h^3/6 + 16h^5/120: the cubic coefficient is recovered to O(h^2).
  for (double h : {1e-2, 1e-3}) {
    const double cubic = (sin_k(Curvature{4.0}, h) - h) / (h * h * h);
    CHECK(cubic == doctest::Approx(-4.0 / 6.0).epsilon(2 * h * h));
  }
}

TEST_CASE("tan_k examples and pole") {
  CHECK(tan_k(Curvature{0.0}, 2.0) == 2.0);
  CHECK(tan_k(Curvature{1.0}, pi / 4) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(tan_k(Curvature{1.0}, pi / 2), PoleError);
  CHECK_THROWS_AS(tan_k(Curvature{4.0}, pi / 4), PoleError);
  CHECK(tan_k(Curvature{-1.0}, 0.5) == doctest::Approx(std::tanh(0.5)).epsilon(1e-15));
}

TEST_CASE("pythagorean identity on a grid") {
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double k = -10.0 + 0.2 * i;
    for (int j = 0; j < 100; ++j) {
      const double x = -3.0 + 6.0 * j / 99;
      const double c = cos_k(Curvature{k}, x), s = sin_k(Curvature{k}, x);
      const double scale = std::max({1.0, c * c, std::abs(k) * s * s});
      worst = std::max(worst, std::abs(c * c + k * s * s - 1.0) / scale);
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("continuity at zero curvature") {
  for (double k : {-1e-3, -1e-6, 1e-9, 1e-6, 1e-3}) {
    for (double x : {0.1, 0.7, 1.5, 2.0}) {
      const double dev = std::abs(cos_k(Curvature{k}, x) - 1.0 + k * x * x / 2);
      CHECK(dev <= 0.05 * k * k * x * x * x * x + 1e-16);
      const double sdev = std::abs(sin_k(Curvature{k}, x) - x + k * x * x * x / 6);
      CHECK(sdev <= 0.01 * k * k * std::pow(x, 5) + 4e-16 * x);
    }
  }
}

TEST_CASE("series branch joins the closed form") {
  // |k| x^2 = 1e-8 is the switch; values on both sides must agree smoothly.
  for (double k : {1.0, -1.0}) {
    const double x0 = 1e-4;
    for (double f : {0.999999, 1.000001}) {
      const double x = x0 * f;
      const Curvature kc{k};
      const double closed = k > 0 ? std::sin(x) : std::sinh(x);
      CHECK(sin_k(kc, x) == doctest::Approx(closed).epsilon(1e-15));
      CHECK(cos_k(kc, x) == doctest::Approx(k > 0 ? std::cos(x) : std::cosh(x)).epsilon(1e-15));
    }
  }
}

TEST_CASE("parity and sphere symmetries") {
  for (double k : {-3.0, 0.0, 0.5, 2.0}) {
    for (double x : {0.1, 0.9, 2.3}) {
      CHECK(sin_k(Curvature{k}, -x) == -sin_k(Curvature{k}, x));
      CHECK(cos_k(Curvature{k}, -x) == cos_k(Curvature{k}, x));
    }
  }
  for (double k : {0.25, 1.0, 7.0}) {
    const Curvature c{k};
    const double period = 2 * pi / std::sqrt(k);
    for (double x : {0.05, 0.4, 1.1}) {
      CHECK(std::abs(sin_k(c, x + period) - sin_k(c, x)) < 1e-12);
      CHECK(std::abs(sin_k(c, c.antipode() - x) - sin_k(c, x)) < 1e-12);
    }
  }
}

TEST_CASE("extended precision agrees with double") {
  for (double k : {-2.0, 0.0, 3.0}) {
    for (double x : {0.2, 1.0}) {
      CHECK(static_cast<double>(sin_k(Curvature{k}, static_cast<long double>(x))) ==
            doctest::Approx(sin_k(Curvature{k}, x)).epsilon(1e-15));
    }
  }
}
