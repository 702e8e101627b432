#pragma once

#include <stdexcept>
#include <string>

namespace lieshift {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad algebra file, unknown label, wrong dimensions.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Division by zero or mixing elements of unrelated fields.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// A checked mathematical property failed on concrete data.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace lieshift
