#pragma once

#include <stdexcept>

namespace rotn {

/// Raised when an exact computation reaches a state that the mathematics
/// rules out (a tie against 1/2 for an irrational orbit point, a rational
/// value where a surd was required). Always an upstream bug, never data.
class ArithmeticInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised for inputs outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a verified property fails (a bounds inequality, a formula).
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rotn
