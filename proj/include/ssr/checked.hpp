#pragma once

#include <cstdint>
#include <span>

#include "ssr/errors.hpp"

namespace ssr {

/// All run lengths, indexes, periods and progression values are exact 64-bit
/// integers. Overflow is an error, never wraparound.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("addition overflows 64-bit range");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw ArithmeticOverflow("subtraction overflows 64-bit range");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ArithmeticOverflow("multiplication overflows 64-bit range");
  return r;
}

inline Int checked_sum(std::span<const Int> values) {
  Int total = 0;
  for (Int v : values) total = checked_add(total, v);
  return total;
}

}  // namespace ssr
