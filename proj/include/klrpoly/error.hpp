#pragma once

#include <stdexcept>
#include <string>

namespace klrpoly {

/// Malformed textual input (permutations, flags, numbers).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on the arguments of an operation does not hold
/// (mismatched n, u not below v, k out of range, ...).
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Exact 64-bit coefficient arithmetic would have wrapped around.
class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// An internal consistency check failed. Always indicates a bug (or a
/// counterexample to a claimed identity), never bad user input.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace klrpoly
