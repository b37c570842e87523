#pragma once

#include <cstdint>

// Small exact-integer helpers shared by the modules. Everything is int64_t;
// the multiplying helpers throw Error(kOverflow) instead of wrapping.

namespace gofk::arith {

using Int = std::int64_t;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// Non-negative gcd with gcd(0, x) = |x|.
Int gcd(Int a, Int b);

// Representative of a mod m in [0, m). Requires m > 0.
Int mod(Int a, Int m);

// Inverse of a modulo m in [0, m), or -1 when gcd(a, m) != 1. Requires m > 0.
Int inverse_mod(Int a, Int m);

}  // namespace gofk::arith
