#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace torelli {

/// Exact rational coefficient (arbitrary precision numerator/denominator).
using Rational = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different spaces or have the wrong length.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Operand has an unsupported exterior degree.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// Input data violates a structural invariant (pairings, primitivity, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed text. `line` is 1-based, 0 when not tied to a file line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Parses "p", "-p" or "p/q" into a reduced rational.
Rational parse_rational(std::string_view text);

/// Reduced "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

}  // namespace torelli
