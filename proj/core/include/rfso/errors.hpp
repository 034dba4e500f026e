#pragma once

#include <stdexcept>
#include <string>

namespace rfso {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A result is too large (or otherwise unrepresentable) in double precision.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent configuration (mismatched parameters, bad run setup).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure ran out of budget before reaching the requested
/// tolerance. Carries the best estimate obtained and its error bound.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, double best_estimate, double error_bound)
      : Error(what), best_(best_estimate), bound_(error_bound) {}

  double best_estimate() const noexcept { return best_; }
  double error_bound() const noexcept { return bound_; }

 private:
  double best_;
  double bound_;
};

}  // namespace rfso
