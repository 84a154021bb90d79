#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jones {

// Malformed polynomial or braid text. `position` is a 0-based offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Generator index outside [1, n-1] for a braid on n strands.
class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Exact division left a nonzero remainder.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Negative Fibonacci index requested with a root that is not a unit.
class NonInvertibleRoot : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured crossing or strand cap was exceeded.
class CapExceeded : public std::length_error {
 public:
  CapExceeded(const std::string& what, long value, long cap)
      : std::length_error(what), value_(value), cap_(cap) {}
  long value() const noexcept { return value_; }
  long cap() const noexcept { return cap_; }

 private:
  long value_;
  long cap_;
};

// Odd powers of A survived writhe normalization of a bracket.
class ParityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ZeroPolynomial : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computed result breaks an identity that must hold.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace jones
