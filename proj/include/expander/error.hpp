#pragma once

#include <stdexcept>
#include <string>

namespace expander {

/// Rejected input: a precondition or structural invariant does not hold.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative numerical method stopped before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace expander
