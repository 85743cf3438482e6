#pragma once

#include <stdexcept>
#include <string>

namespace hybrident {

// Argument outside the domain of an operation (bad parameter, unknown name).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dense linear algebra failed: non-convergence, singular system, unphysical radicand.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition on the dynamics not met, e.g. solving a Lyapunov equation for an unstable drift.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConvergenceError : public NumericalError {
 public:
  ConvergenceError(const std::string& what, double last_residual)
      : NumericalError(what), last_residual_(last_residual) {}

  double last_residual() const noexcept { return last_residual_; }

 private:
  double last_residual_;
};

}  // namespace hybrident
