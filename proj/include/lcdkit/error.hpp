#pragma once

#include <stdexcept>
#include <string>

namespace lcdkit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad matrix file, bad symbol, rank-deficient generator.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Shapes or fields of the operands do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed one of the enumeration guards.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold (singular pivot, zero inverse, ...).
class MathError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcdkit
