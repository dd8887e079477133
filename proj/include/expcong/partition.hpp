#pragma once

// The split of (Z/nZ)^x into R+1, R-1 and R0 for fixed (n, k), plus the
// closed-form prime-modulus counts and the coset structure of R-1.

#include <cstdint>
#include <vector>

#include "expcong/arith.hpp"
#include "expcong/symbol.hpp"

namespace expcong {

inline constexpr u64 kDefaultEnumerationCap = 1'000'000;

struct EnumerationOptions {
  u64 max_n = kDefaultEnumerationCap;
  // Worker threads for the scan. Output is identical for every value.
  unsigned jobs = 1;
};

struct ResiduePartition {
  u64 n = 0;
  u64 k = 0;
  std::vector<u64> r_plus;
  std::vector<u64> r_minus;
  std::vector<u64> r_zero;  // units only
  u64 non_units = 0;

  u64 unit_count() const { return r_plus.size() + r_minus.size() + r_zero.size(); }
};

// Throws ResourceError when n exceeds options.max_n.
void check_enumeration_cap(u64 n, const EnumerationOptions& options);

ResiduePartition enumerate_partition(u64 n, u64 k, const EnumerationOptions& options = {});

struct PrimeCountReport {
  u64 p = 0;
  u64 k = 0;
  u64 m = 0;  // p - 1
  u64 g = 0;  // gcd(k, m)
  u64 count_plus = 0;
  u64 count_minus = 0;
  bool minus_solvable = false;
};

// Closed-form counts of +1 and -1 values modulo an odd prime. No enumeration.
PrimeCountReport prime_counts(u64 p, u64 k);

struct IndexTwoReport {
  // Some unit g has g^k = -1 (as distinct from +1), i.e. R-1 is nonempty.
  bool holds = false;
  u64 witness = 0;
  u64 subgroup_size = 0;   // |R+1|
  u64 coset_size = 0;      // |R-1|
  u64 unit_count = 0;      // phi(n)
};

// Verifies, when R-1 is nonempty, that |R+1 u R-1| = 2|R+1| and that
// R-1 = g * R+1 for the smallest g in R-1 (throws InvariantError otherwise).
IndexTwoReport index_two_check(u64 n, u64 k, const EnumerationOptions& options = {});
IndexTwoReport index_two_check(const ResiduePartition& partition);

// {g * h mod n : h in subgroup}, sorted.
std::vector<u64> coset(u64 g, const std::vector<u64>& subgroup, u64 n);

// Symbol from the index r of a relative to the smallest primitive root:
// +1 if kr = 0, -1 if kr = (p-1)/2 (mod p-1), else 0. Checked against symbol().
SymbolValue symbol_by_primitive_root(i64 a, u64 p, u64 k);

}  // namespace expcong
