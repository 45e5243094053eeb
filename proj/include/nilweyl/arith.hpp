#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilweyl {

// All group and polynomial arithmetic is exact. Entries live in Int and every
// add/mul goes through the checked helpers below; overflow raises instead of
// wrapping.
using Int = std::int64_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OverflowError : Error {
  using Error::Error;
};

// Raised when a longest-element search exceeds its cap, i.e. the requested
// standard parabolic subgroup is not finite within the given bound.
struct NotFiniteError : Error {
  using Error::Error;
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

}  // namespace nilweyl
