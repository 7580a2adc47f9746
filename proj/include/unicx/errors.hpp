#pragma once

#include <stdexcept>
#include <string>

namespace unicx {

/// Malformed arguments: dimension mismatch, unknown vertex, bad file syntax.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size budget (simplex count, search size, window) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed object failed a check it is guaranteed to pass: an inexact
/// division in a closed form, a negative sphere count, a failed shelling.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace unicx
