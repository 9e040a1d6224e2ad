#pragma once

#include <stdexcept>
#include <string>

namespace conway {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Semiring core.
class StarUndefined : public Error {
 public:
  using Error::Error;
};
class Overflow : public Error {
 public:
  using Error::Error;
};

// Matrices.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};
class NotSquare : public Error {
 public:
  using Error::Error;
};
class BadSplit : public Error {
 public:
  using Error::Error;
};
class NotBijective : public Error {
 public:
  using Error::Error;
};

// Power series.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};
class WordTooLong : public Error {
 public:
  using Error::Error;
};
/// Star of a series with nonzero constant term. Also a StarUndefined.
class NotProper : public StarUndefined {
 public:
  using StarUndefined::StarUndefined;
};
class NotCycleFree : public StarUndefined {
 public:
  using StarUndefined::StarUndefined;
};
class CoefficientStarUndefined : public StarUndefined {
 public:
  using StarUndefined::StarUndefined;
};
class CommutationViolated : public Error {
 public:
  using Error::Error;
};

// Automata.
class UnknownLetter : public Error {
 public:
  using Error::Error;
};
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// Rational expressions.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};
class IllStarred : public Error {
 public:
  using Error::Error;
};

// Identity verifier.
class SizeMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed automaton or Cayley-table JSON.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace conway
