#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kingiso {

/// Bad dimension, out-of-range coordinate index, or mismatched arities.
class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed its configured cap.
class EnumerationOverflow : public std::runtime_error {
 public:
  EnumerationOverflow(std::size_t cap, const std::string& what)
      : std::runtime_error(what), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// An internal consistency check failed (e.g. the two boundary counts differ).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace kingiso
