#include "int128.hpp"

#include <atomic>
#include <cstdlib>
#include <limits>

namespace limag {

namespace {

constexpr int kDefaultBits = 127;
constexpr int kMinBits = 4;

// Order-finding walks the powers of x one step at a time; this cap keeps a
// pathological modulus from looking like a hang.
constexpr Int kOrderIterationCap = Int(1) << 32;

std::atomic<int> g_bits{0};  // 0 = not initialized yet

int read_bits_from_env() {
  int bits = kDefaultBits;
  if (const char* env = std::getenv("LIMAG_MAX_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= kMinBits && v <= kDefaultBits) {
      bits = static_cast<int>(v);
    }
  }
  return bits;
}

int active_bits() {
  int bits = g_bits.load(std::memory_order_relaxed);
  if (bits == 0) {
    bits = read_bits_from_env();
    g_bits.store(bits, std::memory_order_relaxed);
  }
  return bits;
}

[[noreturn]] void throw_overflow() {
  throw OverflowError("parameter overflow: magnitude bound 2^" +
                      std::to_string(max_magnitude_bits()) + " - 1 exceeded");
}

}  // namespace

namespace detail {
void set_max_magnitude_bits(int bits) {
  if (bits < kMinBits) bits = kMinBits;
  if (bits > kDefaultBits) bits = kDefaultBits;
  g_bits.store(bits, std::memory_order_relaxed);
}
}  // namespace detail

int max_magnitude_bits() { return active_bits(); }

Int max_magnitude() {
  int bits = active_bits();
  if (bits >= kDefaultBits) return std::numeric_limits<Int>::max();
  return (Int(1) << bits) - 1;
}

bool in_bounds(Int v) {
  Int m = max_magnitude();
  return v >= -m && v <= m;
}

Int checked(Int v) {
  if (!in_bounds(v)) throw_overflow();
  return v;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow();
  return checked(r);
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow();
  return checked(r);
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow();
  return checked(r);
}

Int checked_neg(Int a) {
  return checked_sub(0, a);
}

Int checked_abs(Int a) {
  return a < 0 ? checked_neg(a) : checked(a);
}

Int checked_pow(Int base, int exp) {
  if (exp < 0) throw InvalidArgumentError("negative exponent");
  Int result = 1;
  Int acc = base;
  while (exp > 0) {
    if (exp & 1) result = checked_mul(result, acc);
    exp >>= 1;
    if (exp > 0) acc = checked_mul(acc, acc);
  }
  return result;
}

Int floor_div(Int a, Int b) {
  if (b == 0) throw InvalidArgumentError("division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int floor_mod(Int a, Int b) {
  if (b == 0) throw InvalidArgumentError("division by zero");
  Int m = b < 0 ? -b : b;
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

ExtendedGcd extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_x - q * x;
    old_x = x;
    x = t;
    t = old_y - q * y;
    old_y = y;
    y = t;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {old_r, old_x, old_y};
}

std::optional<Int> mod_inverse(Int a, Int m) {
  if (m < 2) throw InvalidArgumentError("modulus must be >= 2");
  if (a < 0 || a >= m) throw InvalidArgumentError("residue out of range");
  ExtendedGcd e = extended_gcd(a, m);
  if (e.g != 1) return std::nullopt;
  return floor_mod(e.x, m);
}

Int element_order(Int x, Int m) {
  if (m < 2) throw InvalidArgumentError("modulus must be >= 2");
  if (x < 1 || x >= m) throw InvalidArgumentError("element out of range");
  if (gcd(x, m) != 1) {
    throw InvalidArgumentError("element not coprime to modulus");
  }
  Int acc = x % m;
  Int k = 1;
  while (acc != 1) {
    if (++k > kOrderIterationCap) {
      throw CapExceededError("element order exceeds iteration cap");
    }
    acc = mul_mod(acc, x, m);
  }
  return k;
}

Int add_mod(Int a, Int b, Int m) {
  // Residues are below 2^127, so the sum fits unsigned 128-bit exactly.
  UInt s = UInt(a) + UInt(b);
  if (s >= UInt(m)) s -= UInt(m);
  return Int(s);
}

Int sub_mod(Int a, Int b, Int m) {
  return a >= b ? a - b : a - b + m;
}

Int mul_mod(Int a, Int b, Int m) {
  if (m < 1) throw InvalidArgumentError("modulus must be >= 1");
  if (m == 1) return 0;
  a = floor_mod(a, m);
  b = floor_mod(b, m);
  if (m <= Int(std::numeric_limits<std::int64_t>::max())) {
    return Int((UInt(a) * UInt(b)) % UInt(m));
  }
  // Double-and-add for moduli past 63 bits; keeps every intermediate < 2m.
  Int result = 0;
  while (b > 0) {
    if (b & 1) result = add_mod(result, a, m);
    a = add_mod(a, a, m);
    b >>= 1;
  }
  return result;
}

Int pow_mod(Int base, Int exp, Int m) {
  if (exp < 0) throw InvalidArgumentError("negative exponent");
  if (m < 1) throw InvalidArgumentError("modulus must be >= 1");
  if (m == 1) return 0;
  Int result = 1;
  Int acc = floor_mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, acc, m);
    acc = mul_mod(acc, acc, m);
    exp >>= 1;
  }
  return result;
}

std::string to_string(Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  UInt u = neg ? UInt(0) - UInt(v) : UInt(v);
  std::string digits;
  while (u > 0) {
    digits.push_back(char('0' + int(u % 10)));
    u /= 10;
  }
  if (neg) digits.push_back('-');
  return {digits.rbegin(), digits.rend()};
}

Int parse_int(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer literal");
  bool neg = false;
  size_t i = 0;
  if (text[0] == '-') {
    neg = true;
    i = 1;
    if (text.size() == 1) throw ParseError("lone '-' is not an integer");
  }
  Int value = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c < '0' || c > '9') {
      throw ParseError("invalid digit in integer literal: '" +
                       std::string(text) + "'");
    }
    value = checked_add(checked_mul(value, 10), c - '0');
  }
  return neg ? checked_neg(value) : value;
}

}  // namespace limag
