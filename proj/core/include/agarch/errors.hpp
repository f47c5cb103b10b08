#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace agarch {

/// Base of every error raised by the library. The CLI maps each subclass to
/// an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the zero-based data row that failed.
class ParseError : public Error {
 public:
  ParseError(std::size_t row, const std::string& what);
  [[nodiscard]] std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (off-support parameters,
/// dimension mismatch, non-symmetric matrices, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Constant input where variation is required (ACF, autocorrelation time).
class DegenerateSeriesError : public Error {
 public:
  using Error::Error;
};

class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Cholesky factorization failed even after maximum regularization.
class DegenerateCovarianceError : public Error {
 public:
  using Error::Error;
};

}  // namespace agarch
