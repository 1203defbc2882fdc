#pragma once

#include <stdexcept>
#include <string>

namespace tft {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation undefined for the given value (inverse of zero, zero weight).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Index or exponent outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Requested transform order not supported by the field's two-adicity.
class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

/// Buffer length incompatible with the transform (not a power of two, wrong size).
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Supplied root is not a principal root of the required order.
class RootOrderError : public Error {
 public:
  using Error::Error;
};

/// API misuse: arguments in the wrong order or a buffer in the wrong state.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial file or CSV.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace tft
