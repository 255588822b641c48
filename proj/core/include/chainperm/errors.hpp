#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chainperm {

// Base class for every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotABijection : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class BadPattern : public Error {
 public:
  using Error::Error;
};

// Chain-expression syntax error; position is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

class OutOfStatedRange : public Error {
 public:
  using Error::Error;
};

class NoRootFound : public Error {
 public:
  using Error::Error;
};

class UnknownRow : public Error {
 public:
  using Error::Error;
};

class UnknownSequence : public Error {
 public:
  using Error::Error;
};

class UnknownClaim : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// b-file parse error; line is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("parse error at line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace chainperm
