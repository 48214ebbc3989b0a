#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Operands belong to different fields (different p, modulus or family).
class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
};

class CharZero : public Error {
 public:
  CharZero() : Error("frobenius is undefined in characteristic 0") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Invalid field specification: non-prime p, reducible modulus, unsupported size.
class InvalidField : public Error {
 public:
  using Error::Error;
};

/// Raised when a square root does not exist. Carries the rendered element.
class NotASquare : public Error {
 public:
  explicit NotASquare(std::string element)
      : Error("NotASquare(" + element + ")"), element_(std::move(element)) {}
  const std::string& element() const noexcept { return element_; }

 private:
  std::string element_;
};

class WrongCharacteristic : public Error {
 public:
  using Error::Error;
};

class ZeroCoefficient : public Error {
 public:
  ZeroCoefficient() : Error("coefficient must be nonzero") {}
};

class ArityMismatch : public Error {
 public:
  ArityMismatch(std::size_t expected, std::size_t got)
      : Error("expected " + std::to_string(expected) + " matrices, got " + std::to_string(got)) {}
};

/// The form has fewer than two nonzero coefficients. Carries the rendered witness matrix.
class NotUniversalForm : public Error {
 public:
  explicit NotUniversalForm(std::string witness)
      : Error("NotUniversalForm: fewer than two nonzero coefficients; witness " + witness),
        witness_(std::move(witness)) {}
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

class FieldTooLarge : public Error {
 public:
  using Error::Error;
};

class InfiniteField : public Error {
 public:
  InfiniteField() : Error("exhaustive search requires a finite field") {}
};

/// Internal invariant violated. Indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool condition, const char* what) {
  if (!condition) throw InternalError(what);
}

}  // namespace qf
