#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace agi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Structurally invalid quiver (unknown vertex/arrow, non-composable relation, ...).
class QuiverError : public Error {
public:
  using Error::Error;
};

/// A combinatorial map that is not a valid angulation / partial triangulation.
class ValidationError : public Error {
public:
  explicit ValidationError(std::vector<std::string> problems);

  const std::vector<std::string>& problems() const noexcept { return problems_; }

private:
  std::vector<std::string> problems_;
};

class CrossingDiagonals : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class NotAnAngulation : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class NotGentle : public Error {
public:
  using Error::Error;
};

class SignConflict : public Error {
public:
  using Error::Error;
};

class PairingFailure : public Error {
public:
  using Error::Error;
};

class InfeasibleParameters : public Error {
public:
  using Error::Error;
};

} // namespace agi
