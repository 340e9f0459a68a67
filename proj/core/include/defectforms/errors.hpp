#pragma once

#include <stdexcept>
#include <string>

namespace defectforms {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scalar, form or scenario text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A denominator vanishes (or nearly vanishes, for floating point) at the requested point.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (singular matrix, zero constant, bad degree...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The zero tester could not find a sample point avoiding every denominator.
class SamplingExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace defectforms
