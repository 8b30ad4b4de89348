#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>
#include <complex>

namespace resolvent {

/// Raised when an argument violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a function is evaluated at (or numerically at) a pole.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by `solve` when elimination meets a pivot below the singularity threshold.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, std::size_t column, double pivot)
      : std::runtime_error(what), column_(column), pivot_(pivot) {}

  std::size_t column() const noexcept { return column_; }
  double pivot_magnitude() const noexcept { return pivot_; }

 private:
  std::size_t column_;
  double pivot_;
};

/// Raised by iterative routines that hit their iteration cap. Carries the
/// last iterate so callers can decide whether it is usable.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate, double residual,
                   std::size_t iterations, std::vector<std::complex<double>> last_iterate)
      : std::runtime_error(what),
        estimate_(estimate),
        residual_(residual),
        iterations_(iterations),
        last_iterate_(std::move(last_iterate)) {}

  double estimate() const noexcept { return estimate_; }
  double residual() const noexcept { return residual_; }
  std::size_t iterations() const noexcept { return iterations_; }
  const std::vector<std::complex<double>>& last_iterate() const noexcept { return last_iterate_; }

 private:
  double estimate_;
  double residual_;
  std::size_t iterations_;
  std::vector<std::complex<double>> last_iterate_;
};

/// Internal invariant violation (for example a root bracket that lost its sign change).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace resolvent
