#pragma once

#include <stdexcept>
#include <string>

namespace bootcov {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// (m, alpha) pair whose order-statistic indices do not form an interval.
class DegeneratePlan : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Design the library deliberately does not model (e.g. an even-n median).
class UnsupportedDesign : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Exhaustive enumeration requested beyond its size cap.
class EnumerationCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Quadrature that did not reach its tolerance, raised by the convenience
/// wrappers that return a bare number.
class QuadratureNotConverged : public std::runtime_error {
 public:
  QuadratureNotConverged(const std::string& what, double estimate, double abs_error)
      : std::runtime_error(what), estimate_(estimate), abs_error_(abs_error) {}
  double estimate() const { return estimate_; }
  double abs_error() const { return abs_error_; }

 private:
  double estimate_;
  double abs_error_;
};

}  // namespace bootcov
