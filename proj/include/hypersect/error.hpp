#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypersect {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (singular matrix, zero
/// linear form, non-homogeneous input, ...).
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// The smoothness sweep ran out of degree budget without a decision.
class SmoothnessUnknown : public Error {
 public:
  using Error::Error;
};

/// A computation was refused because it exceeds a configured bound.
class ResourceRefusal : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hypersect
