#pragma once

// Exact 64-bit modular arithmetic: powers, factorization, totients, orders,
// primitive roots, discrete logarithms and CRT reconstruction.
//
// Every modulus is capped at 2^62 so that products of two residues fit in an
// unsigned 128-bit intermediate.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace expcong {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline constexpr u64 kMaxModulus = u64{1} << 62;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// An integer together with its prime factorization (primes ascending).
class FactoredInteger {
 public:
  FactoredInteger() = default;

  // Validates the factor list: strictly increasing primes, exponents >= 1,
  // product equal to value.
  FactoredInteger(u64 value, std::vector<PrimePower> factors);

  u64 value() const { return value_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  bool is_prime() const { return factors_.size() == 1 && factors_[0].exponent == 1; }

  friend bool operator==(const FactoredInteger&, const FactoredInteger&) = default;

 private:
  u64 value_ = 1;
  std::vector<PrimePower> factors_;
};

struct OrderInfo {
  u64 base = 0;
  u64 modulus = 0;
  u64 order = 0;
  bool divides_k = false;
  bool divides_2k = false;
};

// Residue of a in [0, n). n must be nonzero.
u64 normalize(i64 a, u64 n);

u64 gcd(u64 a, u64 b);
u64 lcm(u64 a, u64 b);

u64 mul_mod(u64 a, u64 b, u64 n);

// a^e mod n with exact double-width products. Throws DomainError for n = 0
// or n > 2^62.
u64 mod_pow(i64 a, u64 e, u64 n);
u64 mod_pow_u(u64 a, u64 e, u64 n);

// Modular inverse of a unit; throws NotUnitError otherwise.
u64 mod_inverse(i64 a, u64 n);

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n);

FactoredInteger factorize(u64 n);

u64 euler_phi(const FactoredInteger& n);
u64 carmichael_lambda(const FactoredInteger& n);

// Order of a modulo n. k (when nonzero) fills the divisibility flags.
OrderInfo multiplicative_order(i64 a, const FactoredInteger& n, u64 k = 0);

// Same as above with lambda(n) already factored, for tight loops over one n.
OrderInfo multiplicative_order(i64 a, u64 n, const FactoredInteger& lambda, u64 k = 0);

// True iff (Z/nZ)^x is cyclic: n in {1, 2, 4, p^e, 2p^e} for odd p.
bool has_cyclic_unit_group(const FactoredInteger& n);

// Smallest primitive root of an odd prime.
u64 primitive_root(u64 p);

// Largest p accepted by discrete_log (baby-step table of ~10^6 entries).
inline constexpr u64 kMaxDiscreteLogPrime = 1'000'000'000'000ULL;

// r in [0, p-1) with g^r = a (mod p), by baby-step giant-step.
u64 discrete_log(i64 a, u64 g, u64 p);

struct Congruence {
  u64 residue = 0;
  u64 modulus = 1;
};

// x modulo the product of the (pairwise coprime) moduli.
Congruence crt_combine(std::span<const Congruence> system);

}  // namespace expcong
