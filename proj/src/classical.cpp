#include "expcong/classical.hpp"

#include <string>

#include "expcong/error.hpp"

namespace expcong {

namespace {

void require_odd_prime(u64 p) {
  if (p == 2 || !is_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
  if (p > kMaxModulus) throw DomainError("prime exceeds 2^62");
}

}  // namespace

SymbolValue legendre(i64 a, u64 p) {
  require_odd_prime(p);
  const u64 r = mod_pow(a, (p - 1) / 2, p);
  if (r == 1) return SymbolValue::PlusOne;
  if (r == p - 1) return SymbolValue::MinusOne;
  return SymbolValue::Zero;
}

SymbolValue jacobi(i64 a, u64 n) {
  if (n == 0 || n % 2 == 0) throw DomainError("Jacobi symbol needs odd n >= 1, got " + std::to_string(n));
  u64 x = normalize(a, n);
  u64 m = n;
  int sign = 1;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      const u64 r = m % 8;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(x, m);
    if (x % 4 == 3 && m % 4 == 3) sign = -sign;
    x %= m;
  }
  return m == 1 ? symbol_from_int(sign) : SymbolValue::Zero;
}

LegendreCoincidence legendre_coincidence(u64 p, const EnumerationOptions& options) {
  require_odd_prime(p);
  check_enumeration_cap(p, options);
  LegendreCoincidence out;
  out.p = p;
  out.total = p;
  const u64 k = (p - 1) / 2;
  for (u64 a = 0; a < p; ++a) {
    const auto ai = static_cast<i64>(a);
    if (symbol({ai, p, k}) == legendre(ai, p))
      ++out.agreements;
    else if (out.first_mismatch < 0)
      out.first_mismatch = ai;
  }
  return out;
}

bool power_residue_test(i64 a, u64 p, u64 m) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (m < 2) throw DomainError("power m must be >= 2");
  if ((p - 1) % m != 0)
    throw DomainError(std::to_string(m) + " does not divide " + std::to_string(p) + " - 1");
  if (normalize(a, p) == 0) throw NotUnitError(std::to_string(a) + " is not a unit modulo " + std::to_string(p));
  return symbol({a, p, (p - 1) / m}) == SymbolValue::PlusOne;
}

u64 JacobiCompatibility::agreements() const {
  return counts[0][0] + counts[1][1] + counts[2][2];
}

u64 JacobiCompatibility::total() const {
  u64 t = 0;
  for (const auto& row : counts)
    for (u64 c : row) t += c;
  return t;
}

JacobiCompatibility jacobi_compatibility(u64 n, const EnumerationOptions& options) {
  if (n < 3 || n % 2 == 0) throw DomainError("Jacobi compatibility needs odd n >= 3, got " + std::to_string(n));
  check_enumeration_cap(n, options);
  JacobiCompatibility out;
  out.n = n;
  out.k = euler_phi(factorize(n)) / 2;
  for (u64 a = 1; a < n; ++a) {
    if (gcd(a, n) != 1) continue;
    const auto ai = static_cast<i64>(a);
    const SymbolValue s = symbol({ai, n, out.k});
    const SymbolValue j = jacobi(ai, n);
    ++out.counts[to_int(s) + 1][to_int(j) + 1];
  }
  return out;
}

}  // namespace expcong
