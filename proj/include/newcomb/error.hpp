#pragma once

#include <stdexcept>

namespace newcomb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates a type invariant (probability out of range, negative
// utility, unknown config key, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A scalar argument is out of its admissible range (N = 0, resolution < 2).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// A graph does not have the shape an operation requires.
class StructureError : public Error {
 public:
  using Error::Error;
};

class UnsupportedGraphError : public Error {
 public:
  using Error::Error;
};

// Raised when an internal consistency check fails. Always a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace newcomb
