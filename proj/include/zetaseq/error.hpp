#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zetaseq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated a precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// A value that must be integral (or otherwise consistent) was not.
class InternalError : public Error {
 public:
  using Error::Error;
};

class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace zetaseq
