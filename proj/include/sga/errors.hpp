#pragma once

#include <stdexcept>
#include <string>

namespace sga {

// Malformed input text; the CLI maps it to exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A documented precondition does not hold; exit code 3.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two independent computations of the same quantity disagree; exit code 4.
struct TheoremViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sga
