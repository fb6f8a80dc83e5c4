#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace limag {

// All exact arithmetic in this library runs on 128-bit signed integers with
// an explicit magnitude bound. Any operation whose result would exceed the
// bound throws OverflowError; nothing ever wraps silently.
using Int = __int128;
using UInt = unsigned __int128;

// Largest representable magnitude under the active bound, 2^bits - 1.
// Defaults to bits = 127; the LIMAG_MAX_BITS environment variable lowers
// the bound for testing (values above 127 or below 4 are ignored).
Int max_magnitude();
int max_magnitude_bits();

namespace detail {
// Test hook. Production code relies on the one-time environment read.
void set_max_magnitude_bits(int bits);
}  // namespace detail

bool in_bounds(Int v);
Int checked(Int v);
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);
Int checked_abs(Int a);
Int checked_pow(Int base, int exp);

// Floor division/remainder; remainder has the sign of the divisor's
// magnitude, i.e. floor_mod(a, b) is in [0, |b|) for b != 0.
Int floor_div(Int a, Int b);
Int floor_mod(Int a, Int b);

Int gcd(Int a, Int b);

struct ExtendedGcd {
  Int g, x, y;  // g = gcd(a, b) = a*x + b*y
};
ExtendedGcd extended_gcd(Int a, Int b);

// Inverse of a modulo m; requires m >= 2 and 0 <= a < m.
// Absent (not an error) when gcd(a, m) != 1.
std::optional<Int> mod_inverse(Int a, Int m);

// Smallest k >= 1 with x^k = 1 (mod m); requires gcd(x, m) = 1 and
// 1 <= x < m. Iteration is capped; exceeding the cap throws
// CapExceededError.
Int element_order(Int x, Int m);

// Modular arithmetic on residues in [0, m). Safe for any m below the
// magnitude bound; multiplication falls back to double-and-add when the
// product could not be formed directly.
Int add_mod(Int a, Int b, Int m);
Int sub_mod(Int a, Int b, Int m);
Int mul_mod(Int a, Int b, Int m);
Int pow_mod(Int base, Int exp, Int m);

std::string to_string(Int v);

// Parses a decimal integer with optional leading '-'. Throws ParseError on
// malformed text and OverflowError past the bound.
Int parse_int(std::string_view text);

}  // namespace limag
