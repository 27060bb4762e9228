#pragma once

#include <stdexcept>
#include <string>

namespace fcip {

/// Base of every error the toolkit throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (CLI exit code 2, HTTP 400).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A CSV/JSON document that could not be decoded.
class ParseError : public InputError {
 public:
  ParseError(std::size_t row, std::string field, const std::string& what)
      : InputError("row " + std::to_string(row) + ", field '" + field + "': " + what),
        row_(row),
        field_(std::move(field)) {}
  explicit ParseError(const std::string& what) : InputError(what) {}

  std::size_t row() const noexcept { return row_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t row_ = 0;
  std::string field_;
};

/// Valid input whose result falls outside the model's domain (exit code 3).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Iterative method failed to converge or produced non-finite values.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace fcip
