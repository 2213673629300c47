#pragma once

// Small integer number-theory helpers shared by the exact-arithmetic and
// cyclotomy code. Everything works on 64-bit signed integers; overflow in the
// checked helpers throws std::overflow_error instead of wrapping.

#include <cstdint>
#include <vector>

namespace nps {

using Int = std::int64_t;
__extension__ using Wide = __int128;
__extension__ using UWide = unsigned __int128;

/// Non-negative residue of a modulo n (n > 0).
constexpr Int mod(Int a, Int n) noexcept {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

/// Floor division for signed operands (b != 0).
constexpr Int floor_div(Int a, Int b) noexcept {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Largest r with r*r <= n. Throws std::domain_error for n < 0.
Int isqrt(Int n);

bool is_prime(Int n);

/// Distinct prime factors in increasing order.
std::vector<Int> prime_factors(Int n);

Int euler_phi(Int n);

/// a^e mod n for e >= 0.
Int pow_mod(Int a, Int e, Int n);

/// Multiplicative order of a modulo n; 0 when gcd(a, n) != 1.
Int multiplicative_order(Int a, Int n);

}  // namespace nps
