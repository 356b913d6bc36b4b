#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace morselab {

// Error categories surfaced to the CLI as machine-readable records.
enum class ErrorKind {
  parse,
  invalid_argument,
  not_verified,
  uncertified,
  budget,
  structure,
  io,
  internal
};

char const* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept {
    return kind_;
  }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& what)
      : Error(ErrorKind::parse,
              "line " + std::to_string(line) + ", column "
                  + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  // Structured input (JSON) has no line/column to report.
  explicit ParseError(std::string const& what)
      : Error(ErrorKind::parse, what), line_(0), column_(0) {}

  std::size_t line() const noexcept {
    return line_;
  }
  std::size_t column() const noexcept {
    return column_;
  }

 private:
  std::size_t line_;
  std::size_t column_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(std::string const& what)
      : Error(ErrorKind::invalid_argument, what) {}
};

class NotVerified : public Error {
 public:
  explicit NotVerified(std::string const& what)
      : Error(ErrorKind::not_verified, what) {}
};

// A quantity whose value could depend on group elements outside the ball.
class Uncertified : public Error {
 public:
  explicit Uncertified(std::string const& what)
      : Error(ErrorKind::uncertified, what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::string const& what)
      : Error(ErrorKind::budget, what) {}
};

class StructureError : public Error {
 public:
  explicit StructureError(std::string const& what)
      : Error(ErrorKind::structure, what) {}
};

}  // namespace morselab
