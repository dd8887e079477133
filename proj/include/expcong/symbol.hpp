#pragma once

// The exponential congruence symbol (a/n)_k:
//   +1 if a^k = 1 (mod n), -1 if a^k = -1 (mod n), 0 otherwise.
//
// For n = 2 the first two cases coincide; the +1 branch is tested first, so
// every odd a yields +1.

#include <cstdint>
#include <string>

#include "expcong/arith.hpp"

namespace expcong {

enum class SymbolValue : int { MinusOne = -1, Zero = 0, PlusOne = 1 };

constexpr int to_int(SymbolValue v) { return static_cast<int>(v); }
SymbolValue symbol_from_int(int v);

constexpr SymbolValue operator*(SymbolValue x, SymbolValue y) {
  return static_cast<SymbolValue>(to_int(x) * to_int(y));
}
constexpr SymbolValue operator-(SymbolValue x) { return static_cast<SymbolValue>(-to_int(x)); }

std::string to_string(SymbolValue v);

struct SymbolQuery {
  i64 a = 0;
  u64 n = 2;
  u64 k = 1;

  // Throws DomainError unless 2 <= n <= 2^62 and k >= 1.
  void validate() const;
};

// Classifies a residue r = a^k mod n. The heart of every evaluation path.
SymbolValue classify_power(u64 residue, u64 n);

SymbolValue symbol(const SymbolQuery& q);

// Per prime-power evaluation. Each factor contributes the set of signs it is
// consistent with (mod 2 is consistent with both); the result is the common
// sign, +1 preferred, else 0.
SymbolValue symbol_via_crt(const SymbolQuery& q, const FactoredInteger& n_factored);

// Order-based classification. The -1 branch confirms a^k = -1 directly:
// d | 2k with d not dividing k only says a^k has order 2, which need not be
// -1 when (Z/nZ)^x is not cyclic (a = 3, n = 8, k = 1).
SymbolValue symbol_via_order(const SymbolQuery& q);
SymbolValue symbol_via_order(const SymbolQuery& q, const FactoredInteger& lambda_factored);

// The order-based rule given d = ord_n(a) for a unit a in [0, n).
SymbolValue classify_by_order(u64 a, u64 n, u64 order, u64 k);

// Symbol of -a derived from the symbol of a: unchanged for even k, negated
// for odd k. At n = 2 a -1 folds back to +1.
SymbolValue negate_argument(const SymbolQuery& q);

// Symbol of a^{-1}; throws NotUnitError for non-units. Checks the result
// against symbol(q).
SymbolValue invert_argument(const SymbolQuery& q);

// Symbol of a^t at exponent k; checks it against symbol(a, n, t*k).
SymbolValue power_compat(i64 a, u64 t, u64 n, u64 k);

// Membership in A_{n,k} = { units a : a^k = +-1 }.
bool is_in_sign_subgroup(i64 a, u64 n, u64 k);

}  // namespace expcong
