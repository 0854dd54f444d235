#pragma once

#include <cstdint>

#include "dposet/errors.hpp"

namespace dposet {

using Coeff = std::int64_t;

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("coefficient addition overflows int64");
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("coefficient product overflows int64");
  return r;
}

}  // namespace dposet
