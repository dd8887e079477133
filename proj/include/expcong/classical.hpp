#pragma once

// Legendre and Jacobi symbols, m-th power residue testing, and the checks
// relating them to (a/n)_k.

#include <array>
#include <cstdint>

#include "expcong/arith.hpp"
#include "expcong/partition.hpp"
#include "expcong/symbol.hpp"

namespace expcong {

// Euler's criterion. p must be an odd prime.
SymbolValue legendre(i64 a, u64 p);

// Binary reciprocity reduction; n odd, n >= 1. No factorization.
SymbolValue jacobi(i64 a, u64 n);

struct LegendreCoincidence {
  u64 p = 0;
  u64 agreements = 0;
  u64 total = 0;
  i64 first_mismatch = -1;

  bool all_agree() const { return agreements == total; }
};

// Compares symbol(a, p, (p-1)/2) with legendre(a, p) for every a in [0, p).
LegendreCoincidence legendre_coincidence(u64 p, const EnumerationOptions& options = {});

// True iff symbol(a, p, (p-1)/m) = +1, i.e. a is an m-th power mod p.
// Requires m >= 2, m | p-1 and a a unit.
bool power_residue_test(i64 a, u64 p, u64 m);

// Frequency table of (symbol(a, n, phi(n)/2), jacobi(a, n)) over units a.
// Pointwise equality is not assumed: n = 15, a = 7 gives (+1, -1).
struct JacobiCompatibility {
  u64 n = 0;
  u64 k = 0;  // phi(n) / 2
  // counts[s + 1][j + 1]
  std::array<std::array<u64, 3>, 3> counts{};

  u64 count(SymbolValue s, SymbolValue j) const { return counts[to_int(s) + 1][to_int(j) + 1]; }
  u64 agreements() const;
  u64 total() const;
};

JacobiCompatibility jacobi_compatibility(u64 n, const EnumerationOptions& options = {});

}  // namespace expcong
