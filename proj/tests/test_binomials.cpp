#include <gtest/gtest.h>

#include "homlp/binomials.hpp"
#include "oracles.hpp"

using namespace homlp;

TEST(Binomials, AgainstPascalTriangle) {
  auto t = oracle::pascal(60);
  for (long n = 0; n <= 60; ++n) {
    for (long k = 0; k <= n; ++k) EXPECT_EQ(binom(n, k), t[n][k]) << n << " " << k;
  }
  EXPECT_EQ(binom(5, 7), 0);
  EXPECT_EQ(binom(100, 50).get_str(), "100891344545564193334812497256");
}

TEST(Binomials, ParityCountsAgainstBitmasks) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int x = 1; x <= n; ++x) {
        EXPECT_EQ(N_odd(n, k, x), oracle::count_parity(n, k, x, 1)) << n << " " << k << " " << x;
        EXPECT_EQ(N_even(n, k, x), oracle::count_parity(n, k, x, 0)) << n << " " << k << " " << x;
      }
    }
  }
}

TEST(Binomials, QuotedValues) {
  EXPECT_EQ(N_odd(4, 2, 1), 3);
  EXPECT_EQ(N_even(4, 2, 1), 3);
  for (long n = 3; n <= 15; n += 2) {
    for (long k = 1; k <= n; k += 2) EXPECT_EQ(N_even(n, k, n), 0);
  }
  for (long n = 1; n <= 15; ++n) {
    for (long k = 1; k <= n; ++k) EXPECT_EQ(N_odd(n, k, 1), binom(n - 1, k - 1));
  }
  EXPECT_EQ(N_odd(2, 1, 1), 1);
  EXPECT_EQ(N_even(2, 1, 1), 1);
  EXPECT_EQ(N_odd(6, 3, 3), 10);
  EXPECT_EQ(N_even(6, 3, 3), 10);
  EXPECT_EQ(N_even(5, 3, 1), 4);
  EXPECT_EQ(N_even(5, 3, 2), 4);
  EXPECT_EQ(N_even(3, 2, 1), 1);
  EXPECT_EQ(N_even(3, 2, 2), 1);
  EXPECT_EQ(N_odd(4, 4, 2), 0);
  EXPECT_EQ(N_even(4, 4, 2), 1);
}

TEST(Binomials, PartitionAndRecursion) {
  for (long n = 1; n <= 30; ++n) {
    for (long k = 0; k <= n; ++k) {
      for (long x = 1; x <= n; ++x) {
        EXPECT_EQ(N_odd(n, k, x) + N_even(n, k, x), binom(n, k));
        if (k >= 1 && k < n && x > 1 && x < n) {
          EXPECT_EQ(N_even(n, k, x), N_odd(n - 1, k - 1, x - 1) + N_even(n - 1, k, x - 1));
        }
      }
    }
  }
}

TEST(Binomials, Sweeps) {
  auto half = check_half_identity(8);
  EXPECT_TRUE(half.ok());
  EXPECT_EQ(half.checked, 36);
  EXPECT_TRUE(check_shift_lemma(10).ok());
  auto main = check_main_inequality(24);
  EXPECT_TRUE(main.ok());
  EXPECT_GT(main.checked, 0);
  EXPECT_EQ(sweep_json(main)["sweep"], "main_inequality");
}

TEST(Binomials, LongWiderSweeps) {
  EXPECT_TRUE(check_half_identity(40).ok());
  EXPECT_TRUE(check_shift_lemma(40).ok());
  EXPECT_TRUE(check_main_inequality(60).ok());
}

TEST(Binomials, DomainChecks) {
  EXPECT_THROW(N_odd(4, 2, 0), DomainError);
  EXPECT_THROW(N_odd(4, 2, 5), DomainError);
  EXPECT_THROW(N_even(4, 5, 1), DomainError);
  EXPECT_THROW(check_half_identity(0), DomainError);
  EXPECT_THROW(check_shift_lemma(1), DomainError);
  EXPECT_THROW(check_main_inequality(1), DomainError);
}
