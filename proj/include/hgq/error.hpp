#pragma once

#include <stdexcept>
#include <string>

namespace hgq {

/// Malformed or out-of-contract input (bad vertex, empty edge, mixed degrees...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A size guard on an exponential computation was exceeded.
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Integer overflow in exact arithmetic.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

inline void check_guard(int n, int guard, const char* what) {
  if (n > guard) {
    throw GuardError(std::string(what) + ": n = " + std::to_string(n) +
                     " exceeds guard " + std::to_string(guard));
  }
}

}  // namespace hgq
