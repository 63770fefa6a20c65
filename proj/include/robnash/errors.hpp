#pragma once

#include <stdexcept>
#include <string>

namespace robnash {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad profile, wrong shape, schema violation.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A profile space or sweep exceeds the configured enumeration budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// The input is well-formed but outside the operation's domain
/// (e.g. asking for the margin of a non-equilibrium).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A proven implication failed to hold. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace robnash
