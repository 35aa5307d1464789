#pragma once

#include <stdexcept>
#include <string>

namespace uncertainty {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes that do not fit together (row mismatch, zero-sized matrix, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Arguments outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Inputs that violate a type invariant: non-unitary U, unnormalized
// dictionary columns, NaN/Inf entries, rank-deficient B.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed text input (CSV/JSON/set specs).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Linear recovery requested for a configuration with delta >= 1.
class NotRecoverableError : public Error {
 public:
  NotRecoverableError(const std::string& what, double delta) : Error(what), delta_(delta) {}
  double delta() const noexcept { return delta_; }

 private:
  double delta_;
};

}  // namespace uncertainty
