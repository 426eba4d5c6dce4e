#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diskgroups {

/// Caller violated a documented precondition (bad index, budget < 1, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside what an exact routine supports (odd polynomial terms, unknown n).
class UnsupportedInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact-arithmetic or dynamical invariant did not hold; indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The family GG_{n1,n2} has no infinite member (lcm in {2,3,4,6}).
class AlwaysFiniteError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Bisection endpoints do not classify as (Finite, InfinitePresumed).
class BadBracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A constructed word left a disk while being applied (radius too small).
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace diskgroups
