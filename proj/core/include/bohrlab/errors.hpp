#pragma once

#include <stdexcept>
#include <string>

namespace bohrlab {

// Base of every error raised by the library. Each subclass names one failure
// class so callers (the CLI in particular) can map them onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands belong to different groups, or a tuple has the wrong arity.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed the configured cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A value lies outside the domain an operation accepts.
class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

// A bound that holds mathematically failed numerically. Always a bug.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

// A Bohr distance landed within the guard band of the radius.
class AmbiguousBoundary : public Error {
 public:
  using Error::Error;
};

class RetryExhausted : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace bohrlab
