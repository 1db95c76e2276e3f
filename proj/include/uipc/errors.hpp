#pragma once

#include <stdexcept>
#include <string>

namespace uipc {

// Raised when a caller violates an operation's precondition (wrong dialect,
// non-singleton succedent, undesugared classical input, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised by the termination-measure checks in the interpolant recursion.
class MeasureViolation : public ContractError {
 public:
  using ContractError::ContractError;
};

}  // namespace uipc
