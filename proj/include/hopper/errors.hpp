#pragma once

#include <stdexcept>
#include <string>

namespace hopper {

/// A documented precondition of an operation was violated (bad site, model
/// mismatch, unsupported input shape).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured search or size limit was exceeded.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed serialized input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hopper
