#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twistcalc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different genera or have mismatched sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the domain of the operation (g = 0, h < 2, r = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A mathematical hypothesis of the operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A stored or supplied value violates its type invariant.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Input to a geometric predicate sits on the boundary it tests against.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A Hurwitz move index outside 1..l-1.  `position` is the 1-based slot of
/// the offending move inside its sequence (0 when applied on its own).
class BoundsError : public Error {
 public:
  BoundsError(const std::string& what, std::size_t position = 0)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Malformed text in one of the plain-text formats.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace twistcalc
