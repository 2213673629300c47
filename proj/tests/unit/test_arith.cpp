#include <gtest/gtest.h>

#include <limits>
#include <numeric>
#include <stdexcept>

#include "nps/arith.hpp"

using namespace nps;

TEST(Arith, ModIsNonNegative) {
  EXPECT_EQ(mod(-1, 5), 4);
  EXPECT_EQ(mod(-10, 5), 0);
  EXPECT_EQ(mod(7, 5), 2);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, -2), -4);
  EXPECT_EQ(floor_div(6, 3), 2);
}

TEST(Arith, CheckedOpsThrowOnOverflow) {
  const Int big = std::numeric_limits<Int>::max();
  EXPECT_EQ(checked_add(2, 3), 5);
  EXPECT_THROW(checked_add(big, 1), std::overflow_error);
  EXPECT_THROW(checked_sub(std::numeric_limits<Int>::min(), 1), std::overflow_error);
  EXPECT_THROW(checked_mul(big / 2 + 1, 2), std::overflow_error);
}

TEST(Arith, IsqrtMatchesScan) {
  Int r = 0;
  for (Int n = 0; n < 5000; ++n) {
    while ((r + 1) * (r + 1) <= n) ++r;
    ASSERT_EQ(isqrt(n), r) << n;
  }
  const Int big = std::numeric_limits<Int>::max();
  const Int s = isqrt(big);
  EXPECT_LE(static_cast<Wide>(s) * s, big);
  EXPECT_GT(static_cast<Wide>(s + 1) * (s + 1), big);
  EXPECT_THROW(isqrt(-1), std::domain_error);
}

TEST(Arith, PrimalityAndPhiAgreeWithTrialDivision) {
  for (Int n = 0; n < 600; ++n) {
    bool prime = n >= 2;
    for (Int d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    ASSERT_EQ(is_prime(n), prime) << n;
    if (n >= 1) {
      Int phi = 0;
      for (Int k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
      ASSERT_EQ(euler_phi(n), phi) << n;
    }
  }
  EXPECT_EQ(prime_factors(360), (std::vector<Int>{2, 3, 5}));
  EXPECT_EQ(prime_factors(97), (std::vector<Int>{97}));
}

TEST(Arith, OrderByRepeatedMultiplication) {
  for (Int n = 2; n < 60; ++n) {
    for (Int a = 0; a < n; ++a) {
      Int want = 0;
      if (std::gcd(a, n) == 1) {
        Int x = a % n;
        want = 1;
        while (x != 1 % n) {
          x = x * a % n;
          ++want;
        }
      }
      ASSERT_EQ(multiplicative_order(a, n), want) << a << " mod " << n;
    }
  }
  EXPECT_EQ(pow_mod(3, 0, 7), 1);
  EXPECT_EQ(pow_mod(10, 17, 19), 2);
}
