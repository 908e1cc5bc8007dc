#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace citerank {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (bad rows, unknown ids, invalid counts).
class DataError : public Error {
 public:
  using Error::Error;
};

/// A row-level problem in a tabular source; `line` is 1-based.
class ParseError : public DataError {
 public:
  ParseError(std::string source, std::size_t line, const std::string& message)
      : DataError(source + ":" + std::to_string(line) + ": " + message),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

/// An operation was called with inputs outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(int iterations, double residual)
      : Error("power iteration did not converge after " + std::to_string(iterations) +
              " iterations (L1 residual " + std::to_string(residual) + ")"),
        iterations_(iterations),
        residual_(residual) {}

  int iterations() const noexcept { return iterations_; }
  double residual() const noexcept { return residual_; }

 private:
  int iterations_;
  double residual_;
};

}  // namespace citerank
