#pragma once

#include <stdexcept>
#include <string>

namespace twinv {

// Bad arguments from a caller: malformed literals, mismatched handles,
// parameters outside a documented precondition.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A group kind or size that an operation does not handle (D_1, D_2,
// matrix automorphisms of Z_m x Z_n with m != n, ...).
class UnsupportedGroupError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A quantity that must be an integer came out of floating point too far
// from one. Always indicates a wrong character table.
class NumericalIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twinv
