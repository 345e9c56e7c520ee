#pragma once

#include <cstdint>
#include <limits>

#include "wittkit/errors.hpp"

namespace wittkit::checked {

using Wide = __int128;

inline Wide add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer overflow in addition");
  return r;
}

inline Wide sub(Wide a, Wide b) {
  Wide r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow("integer overflow in subtraction");
  return r;
}

inline Wide mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in multiplication");
  return r;
}

inline std::int64_t narrow(Wide a) {
  if (a > std::numeric_limits<std::int64_t>::max() ||
      a < std::numeric_limits<std::int64_t>::min()) {
    throw Overflow("value does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(a);
}

inline Wide abs(Wide a) { return a < 0 ? -a : a; }

inline Wide gcd(Wide a, Wide b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Non-negative remainder.
inline Wide mod(Wide a, Wide m) {
  Wide r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace wittkit::checked
