#pragma once

// Invariant suites behind `curvedwave verify`. Each check records the value it
// achieved and the bound it was held to.

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "curvedwave/kappa_trig.hpp"

namespace curvedwave {

enum class Comparison { below, above, near };

struct Check {
  std::string name;
  double achieved = 0.0;
  double required = 0.0;
  Comparison comparison = Comparison::below;
  bool passed = false;

  static Check below(std::string name, double achieved, double bound);
  static Check above(std::string name, double achieved, double bound);
  /// |achieved - target| <= slack.
  static Check near(std::string name, double achieved, double target, double slack);
};

bool all_passed(const std::vector<Check>& checks);
nlohmann::json to_json(const Check& c);

/// Gram matrices for L in {0,1,3,8}, n = 0..13, plus the s/r substitution
/// cross-check on three half-sphere overlaps.
std::vector<Check> verify_orthogonality(Curvature kappa = Curvature{1.0}, double rel_tol = 1e-13);

/// Operator residual of every level with N <= 6, plus the O(h^2) order check.
std::vector<Check> verify_residuals(Curvature kappa = Curvature{1.0});

/// Shooting for L = 0..3 against N(N+2), N <= 6, plus linear scaling in k.
std::vector<Check> verify_shooting();

/// Random (L, k~) samples: termination, realness, overlap and residual.
std::vector<Check> verify_hyperbolic(int samples = 200, std::uint64_t seed = 20240611);

}  // namespace curvedwave
