#include "nps/arith.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace nps {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

Int isqrt(Int n) {
  if (n < 0) throw std::domain_error("isqrt of negative value " + std::to_string(n));
  if (n < 2) return n;
  // Newton iteration from above; monotone decreasing until it settles.
  auto x = static_cast<UWide>(n);
  UWide y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + static_cast<UWide>(n) / x) / 2;
  }
  return static_cast<Int>(x);
}

bool is_prime(Int n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (Int d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<Int> prime_factors(Int n) {
  std::vector<Int> out;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

Int euler_phi(Int n) {
  if (n < 1) throw std::domain_error("euler_phi requires n >= 1");
  Int result = n;
  for (Int p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

Int pow_mod(Int a, Int e, Int n) {
  if (n == 1) return 0;
  auto base = static_cast<UWide>(mod(a, n));
  UWide acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % static_cast<UWide>(n);
    base = base * base % static_cast<UWide>(n);
    e >>= 1;
  }
  return static_cast<Int>(acc);
}

Int multiplicative_order(Int a, Int n) {
  if (n == 1) return 1;
  if (std::gcd(mod(a, n), n) != 1) return 0;
  Int order = euler_phi(n);
  for (Int p : prime_factors(order)) {
    while (order % p == 0 && pow_mod(a, order / p, n) == 1) order /= p;
  }
  return order;
}

}  // namespace nps
