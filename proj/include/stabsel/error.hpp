#pragma once

#include <stdexcept>
#include <string>

namespace stabsel {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or configuration (bad flag values, out-of-range arguments).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Invalid or malformed input data (missing files, unparsable cells, broken invariants).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Numeric failure at runtime (singular systems, zero-variance statistics).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace stabsel
