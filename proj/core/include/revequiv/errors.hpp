#pragma once

#include <stdexcept>

namespace rev {

// Base class for every error the library raises.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text: DIMACS, circuit files, branching-program files,
// permutation cycle notation.
struct ParseError : Error {
  using Error::Error;
};

// A bit-string argument whose length does not match the expected width.
struct LengthMismatchError : Error {
  using Error::Error;
};

// Two circuits that must share a width do not.
struct WidthMismatchError : Error {
  using Error::Error;
};

// A permutation argument that must be a single 5-cycle is not.
struct NotFiveCycleError : Error {
  using Error::Error;
};

// A gate kind the operation does not accept.
struct UnsupportedGateError : Error {
  using Error::Error;
};

// An exhaustive sweep or brute-force search was asked to go beyond its
// configured size limit.
struct LimitExceededError : Error {
  using Error::Error;
};

// An index out of range, or repeated where distinct values are required.
struct IndexError : Error {
  using Error::Error;
};

// A compiler postcondition on output size failed.
struct BoundExceededError : Error {
  using Error::Error;
};

}  // namespace rev
