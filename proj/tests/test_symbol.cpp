#include <gtest/gtest.h>

#include <numeric>

#include "expcong/arith.hpp"
#include "expcong/error.hpp"
#include "expcong/symbol.hpp"

using namespace expcong;

namespace {

int naive_symbol(i64 a, u64 n, u64 k) {
  const auto ni = static_cast<i64>(n);
  const u64 base = static_cast<u64>(((a % ni) + ni) % ni);
  u64 r = 1 % n;
  for (u64 i = 0; i < k; ++i) r = r * base % n;
  if (r == 1 % n) return 1;
  if (r == n - 1) return -1;
  return 0;
}

int sym(i64 a, u64 n, u64 k) { return to_int(symbol({a, n, k})); }

}  // namespace

TEST(Symbol, Examples) {
  EXPECT_EQ(sym(2, 5, 2), -1);
  EXPECT_EQ(sym(7, 15, 2), 0);
  EXPECT_EQ(sym(4, 15, 2), 1);
  for (u64 n = 3; n < 40; ++n)
    for (u64 k = 1; k < 10; ++k) EXPECT_EQ(sym(1, n, k), 1);
}

TEST(Symbol, ModulusTwoPrefersPlusOne) {
  EXPECT_EQ(sym(1, 2, 1), 1);
  EXPECT_EQ(sym(3, 2, 5), 1);
  EXPECT_EQ(sym(0, 2, 1), 0);
}

TEST(Symbol, DomainErrors) {
  EXPECT_THROW(symbol({2, 1, 1}), DomainError);
  EXPECT_THROW(symbol({2, 0, 1}), DomainError);
  EXPECT_THROW(symbol({2, 5, 0}), DomainError);
  EXPECT_THROW(symbol({2, kMaxModulus + 1, 1}), DomainError);
  EXPECT_NO_THROW(symbol({2, kMaxModulus, 1}));
}

TEST(Symbol, MatchesNaiveEvaluation) {
  for (u64 n = 2; n <= 150; ++n)
    for (i64 a = -static_cast<i64>(n); a < static_cast<i64>(2 * n); ++a)
      for (u64 k = 1; k <= 12; ++k) ASSERT_EQ(sym(a, n, k), naive_symbol(a, n, k)) << a << " " << n << " " << k;
}

TEST(Symbol, NonUnitsAreZero) {
  for (u64 n = 2; n <= 200; ++n)
    for (u64 a = 0; a < n; ++a)
      if (std::gcd(a, n) > 1)
        for (u64 k = 1; k <= 8; ++k) ASSERT_EQ(sym(static_cast<i64>(a), n, k), 0);
}

TEST(SymbolCrt, Examples) {
  EXPECT_EQ(to_int(symbol_via_crt({4, 15, 2}, factorize(15))), 1);
  EXPECT_EQ(to_int(symbol_via_crt({2, 35, 2}, factorize(35))), 0);
  for (i64 x = 0; x < 15; ++x) EXPECT_NE(to_int(symbol_via_crt({x, 15, 2}, factorize(15))), -1);
  // Mod-2 factor accepts either sign.
  EXPECT_EQ(to_int(symbol_via_crt({5, 6, 1}, factorize(6))), -1);
  EXPECT_THROW(symbol_via_crt({4, 15, 2}, factorize(21)), DomainError);
}

TEST(SymbolOrder, Examples) {
  EXPECT_EQ(to_int(symbol_via_order({2, 5, 2})), -1);
  EXPECT_EQ(to_int(symbol_via_order({1, 77, 5})), 1);
  // ord(3 mod 8) = 2 divides 2k but 3 is not -1: non-cyclic group.
  EXPECT_EQ(to_int(symbol_via_order({3, 8, 1})), 0);
  EXPECT_EQ(to_int(symbol_via_order({6, 9, 2})), 0);
}

TEST(Symbol, PathEquivalence) {
  for (u64 n = 2; n <= 300; ++n) {
    const FactoredInteger f = factorize(n);
    const FactoredInteger lf = factorize(carmichael_lambda(f));
    for (u64 a = 0; a < n; ++a)
      for (u64 k = 1; k <= 24; ++k) {
        const SymbolQuery q{static_cast<i64>(a), n, k};
        const SymbolValue d = symbol(q);
        ASSERT_EQ(d, symbol_via_crt(q, f)) << a << " " << n << " " << k;
        ASSERT_EQ(d, symbol_via_order(q, lf)) << a << " " << n << " " << k;
      }
  }
}

TEST(Symbol, ResidueClassInvariance) {
  for (u64 n = 2; n <= 120; ++n) {
    const auto ni = static_cast<i64>(n);
    for (i64 a = 0; a < ni; ++a)
      for (u64 k = 1; k <= 10; ++k) {
        ASSERT_EQ(sym(a, n, k), sym(a + ni, n, k));
        ASSERT_EQ(sym(a, n, k), sym(a - ni, n, k));
        ASSERT_EQ(sym(a, n, k), sym(a - 5 * ni, n, k));
      }
  }
}

TEST(Negation, Examples) {
  EXPECT_EQ(to_int(negate_argument({1, 5, 3})), -1);
  EXPECT_EQ(to_int(negate_argument({2, 5, 2})), -1);
  EXPECT_EQ(sym(-2, 5, 2), sym(2, 5, 2));
  EXPECT_EQ(to_int(negate_argument({1, 5, 2})), 1);
}

TEST(Negation, AgreesWithDirectEvaluation) {
  for (u64 n = 2; n <= 200; ++n)
    for (i64 a = 0; a < static_cast<i64>(n); ++a)
      for (u64 k = 1; k <= 12; ++k) ASSERT_EQ(negate_argument({a, n, k}), symbol({-a, n, k})) << a << " " << n << " " << k;
}

TEST(Inverse, Examples) {
  EXPECT_EQ(to_int(invert_argument({1, 9, 4})), 1);
  EXPECT_EQ(mod_inverse(4, 15), 4u);
  EXPECT_EQ(to_int(invert_argument({4, 15, 2})), 1);
  EXPECT_THROW(invert_argument({3, 15, 2}), NotUnitError);
}

TEST(Inverse, SymmetricOnUnits) {
  for (u64 n = 2; n <= 200; ++n)
    for (u64 a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const u64 inv = mod_inverse(static_cast<i64>(a), n);
      for (u64 k = 1; k <= 12; ++k) ASSERT_EQ(sym(static_cast<i64>(inv), n, k), naive_symbol(static_cast<i64>(a), n, k));
    }
}

TEST(PowerCompat, MatchesNaive) {
  for (u64 n = 2; n <= 120; ++n)
    for (u64 a = 0; a < n; ++a)
      for (u64 t = 1; t <= 4; ++t)
        for (u64 k = 1; k <= 6; ++k)
          ASSERT_EQ(to_int(power_compat(static_cast<i64>(a), t, n, k)), naive_symbol(static_cast<i64>(a), n, t * k));
  EXPECT_THROW(power_compat(2, 0, 5, 1), DomainError);
  EXPECT_THROW(power_compat(2, UINT64_MAX, 5, 2), DomainError);
}

TEST(Periodicity, PeriodIsOrder) {
  for (u64 n = 3; n <= 150; ++n) {
    const FactoredInteger f = factorize(n);
    for (u64 a = 1; a < n; ++a) {
      if (std::gcd(a, n) != 1) continue;
      const u64 d = multiplicative_order(static_cast<i64>(a), f).order;
      for (u64 k = 1; k <= 10; ++k) ASSERT_EQ(sym(static_cast<i64>(a), n, k), sym(static_cast<i64>(a), n, k + 3 * d));
    }
  }
}

TEST(Multiplicativity, RestrictedToSignedUnits) {
  for (u64 n = 2; n <= 150; ++n)
    for (u64 k = 1; k <= 8; ++k)
      for (u64 a = 1; a < n; ++a) {
        const int va = naive_symbol(static_cast<i64>(a), n, k);
        if (va == 0) continue;
        for (u64 b = 1; b < n; ++b) {
          const int vb = naive_symbol(static_cast<i64>(b), n, k);
          if (vb == 0) continue;
          ASSERT_EQ(sym(static_cast<i64>(a * b % n), n, k), va * vb);
        }
      }
}

TEST(Multiplicativity, UnrestrictedCounterexample) {
  EXPECT_EQ(sym(6, 5, 1), 1);
  EXPECT_EQ(sym(2, 5, 1) * sym(3, 5, 1), 0);
}

TEST(SignSubgroup, Examples) {
  EXPECT_TRUE(is_in_sign_subgroup(2, 5, 2));
  EXPECT_TRUE(is_in_sign_subgroup(1, 12, 7));
  EXPECT_FALSE(is_in_sign_subgroup(7, 15, 2));
  EXPECT_FALSE(is_in_sign_subgroup(5, 15, 2));
}

TEST(SymbolValue, Arithmetic) {
  EXPECT_EQ(SymbolValue::MinusOne * SymbolValue::MinusOne, SymbolValue::PlusOne);
  EXPECT_EQ(-SymbolValue::PlusOne, SymbolValue::MinusOne);
  EXPECT_EQ(symbol_from_int(0), SymbolValue::Zero);
  EXPECT_THROW(symbol_from_int(2), DomainError);
  EXPECT_EQ(to_string(SymbolValue::MinusOne), "-1");
}
