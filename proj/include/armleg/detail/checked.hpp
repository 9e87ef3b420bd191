#pragma once

#include <concepts>
#include <stdexcept>

namespace armleg::detail {

// Builtin integers trap on overflow; anything else (e.g. an arbitrary
// precision type) is trusted to be exact.

template <class Int>
Int checked_add(const Int& a, const Int& b) {
  if constexpr (std::integral<Int>) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) {
      throw std::overflow_error("armleg: coefficient overflow in addition");
    }
    return r;
  } else {
    return a + b;
  }
}

template <class Int>
Int checked_sub(const Int& a, const Int& b) {
  if constexpr (std::integral<Int>) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) {
      throw std::overflow_error("armleg: coefficient overflow in subtraction");
    }
    return r;
  } else {
    return a - b;
  }
}

template <class Int>
Int checked_mul(const Int& a, const Int& b) {
  if constexpr (std::integral<Int>) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) {
      throw std::overflow_error(
          "armleg: coefficient overflow in multiplication");
    }
    return r;
  } else {
    return a * b;
  }
}

}  // namespace armleg::detail
