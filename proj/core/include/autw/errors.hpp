#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: index out of range, rank mismatch, bad degree.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text that could not be parsed.  `offset` is the byte position of the
/// offending token inside the parsed string.
class ParseError : public InputError {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : InputError("at byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation was called outside its domain (odd word for the free basis,
/// endomorphism that does not preserve the sign kernel, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The automorphism does not descend along W_n -> W_2.
class NotInducible : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A value violates an invariant that construction should have guaranteed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace autw
