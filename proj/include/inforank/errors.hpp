#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace inforank {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class RejectedEdgeError : public ParseError {
 public:
  using ParseError::ParseError;
};

class EmptyGraphError : public ParseError {
 public:
  EmptyGraphError() : ParseError("input contains no edges") {}
};

/// Structurally invalid arguments (infeasible degrees, size mismatch, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A numerical solve that did not reach its tolerance.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double residual,
              std::optional<std::size_t> node = std::nullopt)
      : Error(what), residual_(residual), node_(node) {}
  double residual() const { return residual_; }
  const std::optional<std::size_t>& node() const { return node_; }

 private:
  double residual_;
  std::optional<std::size_t> node_;
};

/// InfoRank is a ratio against the benchmark entropy; raised when it is zero.
class UndefinedIndexError : public Error {
 public:
  using Error::Error;
};

class UndefinedCorrelationError : public Error {
 public:
  using Error::Error;
};

}  // namespace inforank
