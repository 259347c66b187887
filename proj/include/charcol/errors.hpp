#pragma once

#include <stdexcept>
#include <string>

namespace charcol {

/// Malformed user input: labels, flags, file contents.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a configured size bound.
struct ResourceBoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Input data violates a structural relation (orthogonality, surjectivity, ...).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation not defined for the given chain.
struct UnsupportedChainError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace charcol
