#pragma once

#include <functional>
#include <limits>
#include <string>

#include "curvedwave/errors.hpp"
#include "curvedwave/kappa_trig.hpp"

namespace curvedwave {

/// A radial profile r -> R(r) on a closed interval, for angular momentum L on a
/// space of curvature kappa. Evaluation runs in extended precision so that
/// finite-difference oracles can difference it at small steps.
struct RadialFunction {
  std::function<long double(long double)> eval;
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  int L = 0;
  Curvature kappa;

  bool contains(double r) const noexcept { return r >= lower && r <= upper; }

  long double at(long double r) const {
    if (!contains(static_cast<double>(r))) {
      throw DomainError("radial function evaluated outside [" + std::to_string(lower) + ", " +
                        std::to_string(upper) + "] at r = " +
                        std::to_string(static_cast<double>(r)));
    }
    return eval(r);
  }

  double operator()(double r) const { return static_cast<double>(at(r)); }
};

}  // namespace curvedwave
