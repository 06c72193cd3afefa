#pragma once

#include <stdexcept>
#include <string>

namespace qcalc {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed literal, expression or definition file.
class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Checked 64-bit exponent arithmetic overflowed.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Matrix or vector dimensions do not fit the operation.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class NotUnimodular : public Error {
 public:
  NotUnimodular(const std::string& what, std::string determinant)
      : Error(what), determinant_(std::move(determinant)) {}
  const std::string& determinant() const noexcept { return determinant_; }

 private:
  std::string determinant_;
};

/// An exhaustive check would exceed its evaluation budget.
class SizeGuardExceeded : public Error {
 public:
  using Error::Error;
};

/// Operands come from different scalar rings or quantity spaces.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A construction produced operations that are not constant on classes.
class WellDefinednessError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NonFreeQuotient : public Error {
 public:
  using Error::Error;
};

class ContradictoryConstant : public Error {
 public:
  using Error::Error;
};

/// Generic precondition failure (duplicate names, non-unit element, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace qcalc
