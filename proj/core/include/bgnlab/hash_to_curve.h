#ifndef BGNLAB_HASH_TO_CURVE_H_
#define BGNLAB_HASH_TO_CURVE_H_

#include <cstdint>
#include <string_view>

#include "bgnlab/big_int.h"
#include "bgnlab/curve.h"

namespace bgnlab {

inline constexpr uint32_t kMaxHashToCurveAttempts = 1u << 16;

// SHA-256 expansion of (label, counter) to an integer modulo p, with 128 bits
// of slack so the reduction bias is negligible.
BigInt HashToField(const PrimeField& field, std::string_view label,
                   uint32_t counter);

// Try-and-increment: for counter j = 0, 1, ... lift x_j = H(label, j) to the
// curve, clear the cofactor, and return the first non-identity result.
// Throws kHashExhausted after kMaxHashToCurveAttempts counters.
CurvePoint HashToSubgroup(const SupersingularCurve& curve,
                          const BigInt& cofactor, std::string_view label);

}  // namespace bgnlab

#endif  // BGNLAB_HASH_TO_CURVE_H_
