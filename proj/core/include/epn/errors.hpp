#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace epn {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: rejected before any numerics run. CLI maps these to exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class InvalidDimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DimensionMismatchError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Guard against requests whose cost is exponential in the input.
class ResourceGuardError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Operation needs the block structure but the matrix carries no provenance.
class ClassificationRequiredError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Numeric or certification failure. CLI maps these to exit code 2.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Eigensolver did not converge; carries the offending matrix.
class EigensolverError : public NumericError {
 public:
  EigensolverError(const std::string& what, Eigen::MatrixXd matrix)
      : NumericError(what), matrix_(std::move(matrix)) {}

  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }

 private:
  Eigen::MatrixXd matrix_;
};

class CertificationError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// The requested Hermitization metric does not exist (degenerate or complex
/// spectrum, e.g. at or past the exceptional point).
class MetricUnavailableError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace epn
