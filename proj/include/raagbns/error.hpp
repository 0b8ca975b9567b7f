#pragma once

#include <stdexcept>
#include <string>

namespace raagbns {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad graph or arrangement files, unknown vertices,
// mismatched dimensions, violated preconditions on user-supplied data.
class InputError : public Error {
 public:
  using Error::Error;
};

// An enumeration exceeded its configured node budget.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant that must hold did not. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace raagbns
