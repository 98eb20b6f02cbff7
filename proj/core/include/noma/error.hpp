#pragma once

#include <stdexcept>
#include <string>

namespace noma {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A scenario or allocation that violates a model invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed scenario document. The message names the JSON path.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& path, const std::string& what)
      : ValidationError(path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// The request is well-formed but outside what the evaluator supports,
/// e.g. non-integer signal shape or an over-budget expansion.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical procedure failed to reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File system failure; message carries the path and OS cause.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace noma
