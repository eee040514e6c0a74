#pragma once

#include <cstdint>
#include <stdexcept>

namespace overrank {

/// Exact coefficient type. Arithmetic on it goes through the checked helpers
/// below, which throw instead of wrapping.
using Coeff = std::int64_t;

class CoefficientOverflow : public std::overflow_error {
 public:
  CoefficientOverflow() : std::overflow_error("coefficient overflow in exact arithmetic") {}
};

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw CoefficientOverflow();
  return r;
}

}  // namespace overrank
