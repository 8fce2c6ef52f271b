#include <doctest.h>

#include <cmath>
#include <numbers>

#include "curvedwave/euclid_limit.hpp"
#include "curvedwave/ode_oracle.hpp"
#include "curvedwave/radial_polynomials.hpp"

using namespace curvedwave;
using std::numbers::pi;

namespace {

std::vector<double> expected_levels(int L, double k, double hi) {
  std::vector<double> out;
  for (int N = std::max(L, 1);; ++N) {
    const double e = k * N * (N + 2.0);
    if (e >= hi) break;
    out.push_back(e);
  }
  return out;
}

}  // namespace

TEST_CASE("interior grid") {
  const auto g = interior_grid(0.0, pi, 11);
  REQUIRE(g.size() == 11);
  CHECK(g.front() == doctest::Approx(1e-3));
  CHECK(g.back() == doctest::Approx(pi - 1e-3));
  CHECK_THROWS_AS(interior_grid(0.0, 1e-3, 5), DomainError);
}

TEST_CASE("residual examples") {
  const Curvature unit{1.0};
  const auto constant = radial_profile(0, 0, unit);
  CHECK(radial_operator_residual(constant, 0.0, interior_grid(0, pi, 51)) < 1e-9);
  const auto p32 = radial_profile(3, 2, unit);
  CHECK(radial_operator_residual(p32, 35.0, interior_grid(0, pi, 101)) < 1e-6);
  const double k = 3.0;
  const auto bessel = bessel_profile(1, k);
  CHECK(radial_operator_residual(bessel, k * k, interior_grid(0, 6.0, 101)) < 1e-6);
}

TEST_CASE("residual detects a wrong energy") {
  const auto p = radial_profile(3, 2, Curvature{1.0});
  CHECK(radial_operator_residual(p, 36.0, interior_grid(0, pi, 101)) > 1e-3);
}

TEST_CASE("residual at other curvatures") {
  for (double k : {0.3, 2.0}) {
    const Curvature c{k};
    for (int n : {0, 3, 6}) {
      for (int L : {0, 2}) {
        const int N = n + L;
        const auto p = radial_profile(n, L, c);
        CHECK(radial_operator_residual(p, k * N * (N + 2), interior_grid(0, c.antipode(), 81)) < 1e-6);
      }
    }
  }
}

TEST_CASE("residual decays as h^2") {
  const auto p = radial_profile(4, 1, Curvature{1.0});
  const auto grid = interior_grid(0, pi, 101, 0.1);
  const double r1 = radial_operator_residual(p, 35.0, grid, 2e-2);
  const double r2 = radial_operator_residual(p, 35.0, grid, 1e-2);
  const double r3 = radial_operator_residual(p, 35.0, grid, 5e-3);
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.05));
  CHECK(r2 / r3 == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("shooting examples") {
  const Curvature unit{1.0};
  const auto l0 = shoot_eigenvalues(0, unit, 0.5, 40.0, 10);
  REQUIRE(l0.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) {
    const double N = i + 1.0;
    CHECK(l0[i] == doctest::Approx(N * (N + 2)).epsilon(1e-8));
  }
  const auto l2 = shoot_eigenvalues(2, unit, 0.5, 40.0, 10);
  REQUIRE(l2.size() == 4);
  CHECK(l2[0] == doctest::Approx(8.0).epsilon(1e-8));
  CHECK(l2[3] == doctest::Approx(35.0).epsilon(1e-8));
  const auto l0k4 = shoot_eigenvalues(0, Curvature{4.0}, 2.0, 160.0, 10);
  REQUIRE(l0k4.size() == l0.size());
  for (std::size_t i = 0; i < l0.size(); ++i) CHECK(l0k4[i] / l0[i] == doctest::Approx(4.0).epsilon(1e-8));
}

TEST_CASE("shooting count limit and windows") {
  const auto first2 = shoot_eigenvalues(1, Curvature{1.0}, 0.5, 60.0, 2);
  REQUIRE(first2.size() == 2);
  CHECK(first2[1] == doctest::Approx(8.0).epsilon(1e-8));
  CHECK_THROWS_AS(shoot_eigenvalues(0, Curvature{1.0}, 3.5, 7.5, 5), NoEigenvalueError);
  CHECK_THROWS_AS(shoot_eigenvalues(0, Curvature{-1.0}, 0.5, 5.0, 5), DomainError);
  CHECK_THROWS_AS(shoot_eigenvalues(0, Curvature{1.0}, -1.0, 5.0, 5), DomainError);
}

TEST_CASE("shooting finds every closed-form level for higher L") {
  for (int L = 4; L <= 6; ++L) {
    const auto found = shoot_eigenvalues(L, Curvature{1.0}, 0.5, 100.0, 50);
    const auto want = expected_levels(L, 1.0, 100.0);
    REQUIRE(found.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i) CHECK(found[i] == doctest::Approx(want[i]).epsilon(1e-7));
  }
}

TEST_CASE("Wronskian mismatch changes sign across a level") {
  const double below = wronskian_mismatch(2, Curvature{1.0}, 14.5);
  const double above = wronskian_mismatch(2, Curvature{1.0}, 15.5);
  CHECK(below * above < 0.0);
  CHECK(std::abs(wronskian_mismatch(2, Curvature{1.0}, 15.0)) < 1e-6 * std::abs(below));
}
