#ifndef BOMEGA_ARITH_HPP_
#define BOMEGA_ARITH_HPP_

#include "bomega/errors.hpp"

namespace bomega {

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " + "
                        + std::to_string(b));
  }
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " - "
                        + std::to_string(b));
  }
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " * "
                        + std::to_string(b));
  }
  return r;
}

}  // namespace bomega

#endif  // BOMEGA_ARITH_HPP_
