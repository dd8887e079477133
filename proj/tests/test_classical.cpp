#include <gtest/gtest.h>

#include <numeric>

#include "expcong/arith.hpp"
#include "expcong/classical.hpp"
#include "expcong/error.hpp"
#include "expcong/symbol.hpp"

using namespace expcong;

namespace {

bool naive_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Legendre symbol from the set of squares.
int square_legendre(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  for (u64 x = 1; x < p; ++x)
    if (x * x % p == a) return 1;
  return -1;
}

// Jacobi symbol by multiplying square-set Legendre symbols over the factorization.
int product_jacobi(u64 a, u64 n) {
  int r = 1;
  u64 m = n;
  for (u64 p = 3; p <= m; p += 2)
    while (m % p == 0) {
      r *= square_legendre(a, p);
      m /= p;
    }
  return r;
}

}  // namespace

TEST(Legendre, Examples) {
  EXPECT_EQ(to_int(legendre(2, 7)), 1);
  EXPECT_EQ(to_int(legendre(0, 11)), 0);
  EXPECT_EQ(to_int(legendre(2, 5)), -1);
  EXPECT_THROW(legendre(1, 2), DomainError);
  EXPECT_THROW(legendre(1, 9), DomainError);
}

TEST(Legendre, MatchesSquaresAndSymbol) {
  for (u64 p = 3; p < 400; p += 2) {
    if (!naive_prime(p)) continue;
    for (i64 a = -3; a < static_cast<i64>(p); ++a) {
      const u64 r = normalize(a, p);
      ASSERT_EQ(to_int(legendre(a, p)), square_legendre(r, p));
      ASSERT_EQ(symbol({a, p, (p - 1) / 2}), legendre(a, p));
    }
  }
}

TEST(Legendre, CompletelyMultiplicative) {
  for (u64 p = 3; p < 200; p += 2) {
    if (!naive_prime(p)) continue;
    for (u64 a = 1; a < p; ++a)
      for (u64 b = 1; b < p; ++b)
        ASSERT_EQ(legendre(static_cast<i64>(a), p) * legendre(static_cast<i64>(b), p), legendre(static_cast<i64>(a * b), p));
  }
}

TEST(LegendreCoincidence, Counts) {
  for (u64 p : {3u, 5u, 97u}) {
    const LegendreCoincidence c = legendre_coincidence(p);
    EXPECT_EQ(c.total, p);
    EXPECT_EQ(c.agreements, p);
    EXPECT_TRUE(c.all_agree());
    EXPECT_EQ(c.first_mismatch, -1);
  }
}

TEST(Jacobi, Examples) {
  EXPECT_EQ(to_int(jacobi(2, 15)), 1);
  EXPECT_EQ(to_int(jacobi(7, 15)), -1);
  EXPECT_EQ(to_int(jacobi(5, 1)), 1);
  EXPECT_EQ(to_int(jacobi(33, 9999)), 0);
  EXPECT_EQ(to_int(jacobi(34, 9999)), -1);
  EXPECT_EQ(to_int(jacobi(35, 9999)), 1);
  EXPECT_THROW(jacobi(3, 10), DomainError);
}

TEST(Jacobi, EqualsLegendreProduct) {
  for (u64 n = 1; n <= 2000; n += 2)
    for (u64 a : {0u, 1u, 2u, 3u, 5u, 6u, 7u, 10u, 11u, 1000u}) ASSERT_EQ(to_int(jacobi(static_cast<i64>(a), n)), product_jacobi(a, n)) << a << " " << n;
}

TEST(JacobiCompatibility, ReportsBothPairs) {
  const JacobiCompatibility c = jacobi_compatibility(15);
  EXPECT_EQ(c.k, 4u);
  EXPECT_EQ(to_int(symbol({2, 15, 4})), 1);
  EXPECT_GT(c.count(SymbolValue::PlusOne, SymbolValue::PlusOne), 0u);
  EXPECT_GT(c.count(SymbolValue::PlusOne, SymbolValue::MinusOne), 0u);
  EXPECT_EQ(c.total(), 8u);
  EXPECT_LT(c.agreements(), c.total());

  const JacobiCompatibility c9 = jacobi_compatibility(9);
  EXPECT_GT(c9.count(SymbolValue::PlusOne, SymbolValue::PlusOne), 0u);
  EXPECT_THROW(jacobi_compatibility(8), DomainError);
}

TEST(JacobiCompatibility, PrimeModulusAgreesEverywhere) {
  for (u64 p : {3u, 7u, 101u}) {
    const JacobiCompatibility c = jacobi_compatibility(p);
    EXPECT_EQ(c.agreements(), c.total());
  }
}

TEST(PowerResidue, Examples) {
  EXPECT_TRUE(power_residue_test(6, 7, 3));
  EXPECT_FALSE(power_residue_test(2, 7, 3));
  for (u64 p : {7u, 13u, 31u}) EXPECT_TRUE(power_residue_test(1, p, 3));
  EXPECT_THROW(power_residue_test(2, 7, 4), DomainError);
  EXPECT_THROW(power_residue_test(7, 7, 3), NotUnitError);
}

TEST(PowerResidue, MatchesExhaustiveSearch) {
  for (u64 p = 3; p < 300; p += 2) {
    if (!naive_prime(p)) continue;
    for (u64 m = 2; m < p; ++m) {
      if ((p - 1) % m) continue;
      std::vector<bool> hit(p, false);
      for (u64 b = 1; b < p; ++b) {
        u64 r = 1;
        for (u64 i = 0; i < m; ++i) r = r * b % p;
        hit[r] = true;
      }
      for (u64 a = 1; a < p; ++a) ASSERT_EQ(power_residue_test(static_cast<i64>(a), p, m), hit[a]) << a << " " << p << " " << m;
    }
  }
}
