#ifndef NUMSG_CHECKED_HPP
#define NUMSG_CHECKED_HPP

#include "numsg/errors.hpp"

namespace numsg {

[[nodiscard]] inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

[[nodiscard]] inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

[[nodiscard]] inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

// Floor division for a positive divisor; C++ '/' truncates toward zero.
[[nodiscard]] constexpr Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

[[nodiscard]] constexpr Int floor_mod(Int a, Int b) {
  Int r = a % b;
  return r < 0 ? r + b : r;
}

}  // namespace numsg

#endif  // NUMSG_CHECKED_HPP
