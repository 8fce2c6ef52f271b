#pragma once

#include <stdexcept>
#include <string>

namespace curvedwave {

/// Argument outside the region where an operation is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// tan_k evaluated where cos_k vanishes.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative procedure stopped before meeting its tolerance.
/// `estimate` carries the best value reached.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}

  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// Eigenvalue search found nothing in the requested window.
class NoEigenvalueError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ODE integration could not reach its target.
class IntegrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Missing or inconsistent command-line parameters.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace curvedwave
