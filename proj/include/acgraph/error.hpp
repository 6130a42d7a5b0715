#pragma once

#include <stdexcept>
#include <string>

namespace acg {

/// Malformed user input: bad schema, invalid indices, non-bijective maps.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A multiplication table or homomorphism failed its invariant checks.
class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

/// A computation would exceed the configured order cap or state budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace acg
