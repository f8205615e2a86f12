#pragma once

#include <stdexcept>
#include <string>

namespace ambicard {

/// Malformed or inconsistent input (bad JSON, invalid action, wrong prime).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal self-check failed.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An element of a ring has no inverse; the message names the witness.
class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace ambicard
