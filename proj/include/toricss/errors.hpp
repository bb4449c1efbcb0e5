#pragma once

#include <stdexcept>
#include <string>

namespace toricss {

/// A mathematical precondition of an operation does not hold for the input
/// (non-complete fan passed to a completeness-only routine, and so on).
class HypothesisError : public std::domain_error {
 public:
  HypothesisError(std::string predicate, const std::string& message)
      : std::domain_error(message), predicate_(std::move(predicate)) {}
  const std::string& predicate() const { return predicate_; }

 private:
  std::string predicate_;
};

/// Cones supplied as a fan do not meet along common faces, or a cone is not
/// strongly convex.
class InvalidFanError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The two maps handed to `complex_cohomology` do not compose to zero.
class NotAComplexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed JSON input.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed identity that must hold by construction failed (d1 o d1 != 0
/// and the like). Indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace toricss
