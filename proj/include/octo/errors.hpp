#pragma once

#include <stdexcept>
#include <string>

namespace octo {

/// Precondition of an operation was not met by the caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Request would allocate or compute beyond the configured size guard.
class ResourceGuard : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Point lies (numerically) outside the domain of a chart.
class OutsideChart : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a numerical invariant that the algebra guarantees is broken.
class Inconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace octo
