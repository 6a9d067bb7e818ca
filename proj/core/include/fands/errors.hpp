#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fands {

/// Base class for data errors raised while reading input files.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Structural problem with a whole file (missing column, inconsistent duplicate).
class FormatError : public Error {
public:
  using Error::Error;
};

/// A malformed record; carries the 1-based line number where the record starts.
class RecordError : public Error {
public:
  RecordError(const std::string& message, std::size_t line)
      : Error(message + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Raised when an operation needs at least two connected nodes.
class DegenerateGraphError : public Error {
public:
  using Error::Error;
};

} // namespace fands
