#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace icint {

// Validation failures (CLI exit code 2).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NegativeWeightError : ValidationError {
  using ValidationError::ValidationError;
};

struct ZeroRowError : ValidationError {
  using ValidationError::ValidationError;
};

struct MissingEdgeError : ValidationError {
  using ValidationError::ValidationError;
};

struct InvalidKError : ValidationError {
  using ValidationError::ValidationError;
};

struct InvalidPError : ValidationError {
  using ValidationError::ValidationError;
};

struct EmptyListError : ValidationError {
  using ValidationError::ValidationError;
};

struct BudgetExceededError : ValidationError {
  using ValidationError::ValidationError;
};

// Solver failure (CLI exit code 3).
struct NotConvergedError : std::runtime_error {
  NotConvergedError(double residual_, int iterations_)
      : std::runtime_error("solver did not converge: residual=" +
                           std::to_string(residual_) + " after " +
                           std::to_string(iterations_) + " iterations"),
        residual(residual_),
        iterations(iterations_) {}
  double residual;
  int iterations;
};

}  // namespace icint
