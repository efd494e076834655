#pragma once

#include <stdexcept>
#include <string>

namespace schwarzkit {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands with incompatible dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A value failed a construction-time or precondition check
// (non-finite entry, zero vector where a direction is required,
// non-unit weight vector, non-orthonormal family, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A scalar parameter is outside its admissible range (p < 2, bad tolerance, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; message carries line/offset context.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A quantity that is nonnegative by construction came out negative beyond
// tolerance: a bug in this library, not in the caller's data.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace schwarzkit
