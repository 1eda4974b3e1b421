#pragma once

#include <stdexcept>
#include <string>

namespace factorlab {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6, edge lists, prescription literals).
// Messages name the offending byte offset or line where that is meaningful.
struct ParseError : Error {
  using Error::Error;
};

// A precondition on an API argument was violated.
struct ArgumentError : Error {
  using Error::Error;
};

// A computation exceeded its Budget (edge cap, vertex cap, or wall clock).
// Carries the best lower bound proved before giving up, when one exists.
struct BudgetError : Error {
  explicit BudgetError(const std::string& what, int best_bound_so_far = -1)
      : Error(what), best_bound(best_bound_so_far) {}
  int best_bound;  // -1 when no bound was established
};

// A certified mathematical invariant failed to hold. Reaching this means
// either the implementation or the theory it encodes is wrong, so the
// failure is reported loudly instead of being papered over.
struct TheoremViolation : Error {
  using Error::Error;
};

}  // namespace factorlab
