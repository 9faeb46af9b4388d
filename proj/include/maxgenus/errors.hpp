#pragma once

#include <stdexcept>
#include <string>

namespace maxgenus {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class InvalidField : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A step of a constructive procedure produced data that contradicts
// the identity it is supposed to satisfy.
class ConstructionFailure : public Error {
 public:
  using Error::Error;
};

// An internal invariant was violated (e.g. a non-square graded block).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class Timeout : public Error {
 public:
  Timeout() : Error("deadline exceeded") {}
};

}  // namespace maxgenus
