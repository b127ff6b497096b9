#pragma once

#include <stdexcept>
#include <string>

namespace phc {

/// Raised when caller-supplied data violates a documented precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a construction step that is guaranteed to succeed does not.
/// Seeing one of these means a bug, or a hole in the underlying argument.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace phc
