#include "expcong/arith.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <unordered_map>

#include "expcong/error.hpp"

namespace expcong {

namespace {

using u128 = unsigned __int128;

void require_modulus(u64 n) {
  if (n == 0) throw DomainError("modulus must be positive");
  if (n > kMaxModulus) throw DomainError("modulus exceeds 2^62: " + std::to_string(n));
}

constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Primes below 1000, used for trial division before rho.
const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    std::vector<bool> composite(1000, false);
    for (u64 i = 2; i < 1000; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = i * i; j < 1000; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

u64 pow_mod_raw(u64 base, u64 e, u64 n) {
  u64 result = 1 % n;
  base %= n;
  if (n <= UINT32_MAX) {
    while (e > 0) {
      if (e & 1) result = result * base % n;
      base = base * base % n;
      e >>= 1;
    }
    return result;
  }
  while (e > 0) {
    if (e & 1) result = static_cast<u64>(static_cast<u128>(result) * base % n);
    base = static_cast<u64>(static_cast<u128>(base) * base % n);
    e >>= 1;
  }
  return result;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n.
u64 rho_factor(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    auto step = [&](u64 x) { return static_cast<u64>((static_cast<u128>(x) * x + c) % n); };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 kBatch = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      u64 k = 0;
      do {
        ys = y;
        const u64 lim = std::min(kBatch, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = step(y);
          q = static_cast<u64>(static_cast<u128>(q) * (x > y ? x - y : y - x) % n);
        }
        g = gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const u64 d = rho_factor(n);
  factor_into(d, primes);
  factor_into(n / d, primes);
}

std::vector<u64> distinct_primes(const FactoredInteger& f) {
  std::vector<u64> out;
  out.reserve(f.factors().size());
  for (const auto& pp : f.factors()) out.push_back(pp.prime);
  return out;
}

}  // namespace

FactoredInteger::FactoredInteger(u64 value, std::vector<PrimePower> factors)
    : value_(value), factors_(std::move(factors)) {
  if (value_ == 0) throw DomainError("cannot factor zero");
  u128 product = 1;
  u64 previous = 1;
  for (const auto& pp : factors_) {
    if (pp.exponent == 0 || pp.prime <= previous || !expcong::is_prime(pp.prime))
      throw DomainError("malformed factorization of " + std::to_string(value_));
    previous = pp.prime;
    for (unsigned i = 0; i < pp.exponent; ++i) {
      product *= pp.prime;
      if (product > value_) throw DomainError("factorization overshoots " + std::to_string(value_));
    }
  }
  if (product != value_) throw DomainError("factorization does not multiply to " + std::to_string(value_));
}

u64 normalize(i64 a, u64 n) {
  if (n == 0) throw DomainError("modulus must be positive");
  if (a >= 0) return static_cast<u64>(a) % n;
  // |a| as unsigned without overflow at INT64_MIN
  const u64 mag = static_cast<u64>(-(a + 1)) + 1;
  const u64 r = mag % n;
  return r == 0 ? 0 : n - r;
}

u64 gcd(u64 a, u64 b) {
  while (b != 0) {
    const u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u64 lcm(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  return a / gcd(a, b) * b;
}

u64 mul_mod(u64 a, u64 b, u64 n) {
  require_modulus(n);
  return static_cast<u64>(static_cast<u128>(a % n) * (b % n) % n);
}

u64 mod_pow(i64 a, u64 e, u64 n) {
  require_modulus(n);
  return pow_mod_raw(normalize(a, n), e, n);
}

u64 mod_pow_u(u64 a, u64 e, u64 n) {
  require_modulus(n);
  return pow_mod_raw(a % n, e, n);
}

u64 mod_inverse(i64 a, u64 n) {
  require_modulus(n);
  const u64 x = normalize(a, n);
  // extended Euclid on signed 128-bit to avoid overflow
  __int128 old_r = x, r = n, old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) {
    if (n == 1) return 0;
    throw NotUnitError(std::to_string(a) + " is not invertible modulo " + std::to_string(n));
  }
  __int128 inv = old_s % static_cast<__int128>(n);
  if (inv < 0) inv += n;
  return static_cast<u64>(inv);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 w : kWitnesses) {
    u64 x = pow_mod_raw(w, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = static_cast<u64>(static_cast<u128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FactoredInteger factorize(u64 n) {
  if (n == 0) throw DomainError("cannot factor zero");
  if (n > kMaxModulus) throw DomainError("value exceeds 2^62: " + std::to_string(n));
  std::vector<u64> primes;
  u64 rest = n;
  for (u64 p : small_primes()) {
    if (p * p > rest) break;
    while (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    }
  }
  factor_into(rest, primes);
  std::sort(primes.begin(), primes.end());

  std::vector<PrimePower> factors;
  for (u64 p : primes) {
    if (!factors.empty() && factors.back().prime == p)
      ++factors.back().exponent;
    else
      factors.push_back({p, 1});
  }
  return FactoredInteger(n, std::move(factors));
}

u64 euler_phi(const FactoredInteger& n) {
  u64 phi = 1;
  for (const auto& [p, e] : n.factors()) {
    phi *= p - 1;
    for (unsigned i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

u64 carmichael_lambda(const FactoredInteger& n) {
  u64 lambda = 1;
  for (const auto& [p, e] : n.factors()) {
    u64 part;
    if (p == 2) {
      part = e <= 2 ? (u64{1} << (e - 1)) : (u64{1} << (e - 2));
    } else {
      part = p - 1;
      for (unsigned i = 1; i < e; ++i) part *= p;
    }
    lambda = lcm(lambda, part);
  }
  return lambda;
}

OrderInfo multiplicative_order(i64 a, const FactoredInteger& n, u64 k) {
  if (n.value() < 2) throw DomainError("order needs modulus >= 2");
  return multiplicative_order(a, n.value(), factorize(carmichael_lambda(n)), k);
}

OrderInfo multiplicative_order(i64 a, u64 n, const FactoredInteger& lambda, u64 k) {
  if (n < 2) throw DomainError("order needs modulus >= 2");
  require_modulus(n);
  const u64 base = normalize(a, n);
  if (gcd(base, n) != 1)
    throw NotUnitError(std::to_string(a) + " is not a unit modulo " + std::to_string(n));

  u64 d = lambda.value();
  for (const auto& [q, e] : lambda.factors()) {
    for (unsigned i = 0; i < e && pow_mod_raw(base, d / q, n) == 1; ++i) d /= q;
  }
  if (pow_mod_raw(base, d, n) != 1)
    throw InvariantError("lambda(n) does not annihilate " + std::to_string(base));

  OrderInfo info{base, n, d, false, false};
  if (k != 0) {
    info.divides_k = k % d == 0;
    info.divides_2k = (static_cast<u128>(k) * 2) % d == 0;
  }
  return info;
}

bool has_cyclic_unit_group(const FactoredInteger& n) {
  const auto& f = n.factors();
  if (f.empty()) return true;
  if (f.size() == 1) return f[0].prime != 2 || f[0].exponent <= 2;
  if (f.size() == 2) return f[0].prime == 2 && f[0].exponent == 1;
  return false;
}

u64 primitive_root(u64 p) {
  if (p == 2 || !is_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
  if (p > kMaxModulus) throw DomainError("prime exceeds 2^62");
  const auto qs = distinct_primes(factorize(p - 1));
  for (u64 g = 2; g < p; ++g) {
    const bool generates = std::none_of(qs.begin(), qs.end(),
                                        [&](u64 q) { return pow_mod_raw(g, (p - 1) / q, p) == 1; });
    if (generates) return g;
  }
  throw InvariantError("no primitive root found for prime " + std::to_string(p));
}

u64 discrete_log(i64 a, u64 g, u64 p) {
  if (p == 2 || !is_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
  if (p > kMaxDiscreteLogPrime)
    throw ResourceError("discrete_log limited to p <= " + std::to_string(kMaxDiscreteLogPrime));
  const u64 target = normalize(a, p);
  if (target == 0) throw NotUnitError("0 has no discrete logarithm");
  g %= p;
  for (u64 q : distinct_primes(factorize(p - 1))) {
    if (g == 0 || pow_mod_raw(g, (p - 1) / q, p) == 1)
      throw DomainError(std::to_string(g) + " is not a primitive root modulo " + std::to_string(p));
  }

  const u64 order = p - 1;
  const auto m = static_cast<u64>(std::ceil(std::sqrt(static_cast<double>(order))));
  std::unordered_map<u64, u64> baby;
  baby.reserve(m);
  u64 cur = 1;
  for (u64 j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = static_cast<u64>(static_cast<u128>(cur) * g % p);
  }
  const u64 giant = pow_mod_raw(mod_inverse(static_cast<i64>(g), p), m, p);
  u64 gamma = target;
  for (u64 i = 0; i <= m; ++i) {
    if (auto it = baby.find(gamma); it != baby.end()) return (i * m + it->second) % order;
    gamma = static_cast<u64>(static_cast<u128>(gamma) * giant % p);
  }
  throw InvariantError("discrete log not found; generator check is inconsistent");
}

Congruence crt_combine(std::span<const Congruence> system) {
  Congruence acc{0, 1};
  for (const auto& c : system) {
    if (c.modulus == 0) throw DomainError("CRT modulus must be positive");
    if (gcd(acc.modulus, c.modulus) != 1)
      throw DomainError("CRT moduli are not pairwise coprime");
    if (static_cast<u128>(acc.modulus) * c.modulus > kMaxModulus)
      throw DomainError("CRT product exceeds 2^62");
    const u64 m = c.modulus;
    const u64 r = c.residue % m;
    if (m == 1) continue;
    const u64 diff = (r + m - acc.residue % m) % m;
    const u64 t = static_cast<u64>(static_cast<u128>(diff) * mod_inverse(static_cast<i64>(acc.modulus % m), m) % m);
    acc.residue += acc.modulus * t;
    acc.modulus *= m;
  }
  return acc;
}

}  // namespace expcong
