#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "fracterm/term.hpp"

namespace fracterm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lexical or syntax error; `offset` is the 0-based character index.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class PositionError : public Error {
 public:
  using Error::Error;
};

/// Unbound variable during evaluation.
class EvalError : public Error {
 public:
  using Error::Error;
};

/// An argument outside an operation's domain (open term where a closed one
/// is required, non-simple fraction, composite modulus, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A rule instance that does not match the addressed subterm.
class MatchError : public Error {
 public:
  using Error::Error;
};

/// Division-safe calculation refused an input containing an uncommon
/// fraction. Carries the outermost offending subterm and its position.
class SafetyError : public Error {
 public:
  SafetyError(Term subterm, Position position);
  const Term& subterm() const { return subterm_; }
  const Position& position() const { return position_; }

 private:
  Term subterm_;
  Position position_;
};

}  // namespace fracterm
