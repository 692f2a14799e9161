#pragma once

#include <stdexcept>
#include <string>

namespace operforge {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A coefficient was requested outside of the window on which it is known.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// Malformed input document.
class ParseError : public Error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace operforge
