#pragma once

#include <stdexcept>
#include <string>

namespace meanineq {

/// Base of every error raised by the library. The CLI maps all of them to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (non-positive scalar,
/// eigenvalue at or below a floor, ...). Carries the offending value.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, double value) : Error(what), value_(value) {}
  explicit DomainError(const std::string& what) : Error(what) {}

  double value() const noexcept { return value_; }

 private:
  double value_ = 0.0;
};

/// Minimum eigenvalue did not clear the positive-definiteness floor.
class NotPositiveDefinite : public DomainError {
 public:
  NotPositiveDefinite(const std::string& what, double min_eigenvalue)
      : DomainError(what, min_eigenvalue) {}

  double min_eigenvalue() const noexcept { return value(); }
};

/// Malformed call: dimension mismatch, empty grid, bad config, unknown id.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A stated precondition on the inputs failed (non-commuting pair, partition of unity).
class PreconditionError : public UsageError {
 public:
  PreconditionError(const std::string& what, double residual) : UsageError(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// An iterative routine exhausted its budget.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, double residual) : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace meanineq
