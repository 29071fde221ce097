#pragma once

#include <stdexcept>
#include <string>

namespace isw {

// Argument outside the mathematical domain of a function (NaN, Inf, y<=0 for Ci, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation at (or within the refusal radius of) a genuine singularity.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A value type invariant would be violated.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Sampled data too coarse for the requested operation.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A truncated series or quadrature cannot meet its accuracy contract.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AlignmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace isw
