#pragma once

#include <stdexcept>
#include <string>

namespace keyring {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad edge lists, out-of-range vertices, invalid parameters.
struct InvalidInput : Error {
  using Error::Error;
};

/// A documented precondition does not hold (density threshold, leaf range).
struct PreconditionError : Error {
  using Error::Error;
};

/// An exact search hit its node-expansion cap. Distinct from an "absent"
/// result: absence is a mathematical claim, this is an abort.
struct BudgetExceeded : Error {
  using Error::Error;
};

/// An internal invariant failed. Always a bug, never a property of the input.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace keyring
