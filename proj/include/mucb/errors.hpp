#pragma once

#include <stdexcept>
#include <string>

namespace mucb {

// Violated precondition on a caller-supplied value.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Theorem-level hypothesis not met (e.g. alpha <= 4 for the regret bound).
class HypothesisViolation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Iterative special-function evaluation failed to reach tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mucb
