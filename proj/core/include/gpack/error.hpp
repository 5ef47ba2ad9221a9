#pragma once

#include <stdexcept>
#include <string>

namespace gpack {

// Base of every exception thrown by the library. The CLI maps each subclass
// to a stable exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range input: bad indices, shape mismatches, unparsable
// JSON, violated preconditions.
class InputError : public Error {
 public:
  using Error::Error;
};

// A Gram matrix has an eigenvalue that is significantly negative.
class NotPsdError : public InputError {
 public:
  using InputError::InputError;
};

// Floating point work did not reach the requested accuracy.
class NumericError : public Error {
 public:
  using Error::Error;
};

// An explicit size or search budget was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace gpack
