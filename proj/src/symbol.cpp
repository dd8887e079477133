#include "expcong/symbol.hpp"

#include "expcong/error.hpp"

namespace expcong {

SymbolValue symbol_from_int(int v) {
  switch (v) {
    case -1: return SymbolValue::MinusOne;
    case 0: return SymbolValue::Zero;
    case 1: return SymbolValue::PlusOne;
    default: throw DomainError("symbol value out of range: " + std::to_string(v));
  }
}

std::string to_string(SymbolValue v) {
  switch (v) {
    case SymbolValue::MinusOne: return "-1";
    case SymbolValue::Zero: return "0";
    case SymbolValue::PlusOne: return "+1";
  }
  return "?";
}

void SymbolQuery::validate() const {
  if (n < 2) throw DomainError("modulus n must be >= 2, got " + std::to_string(n));
  if (n > kMaxModulus) throw DomainError("modulus n exceeds 2^62");
  if (k < 1) throw DomainError("exponent k must be >= 1");
}

SymbolValue classify_power(u64 residue, u64 n) {
  if (residue == 1 % n) return SymbolValue::PlusOne;
  if (residue == n - 1) return SymbolValue::MinusOne;
  return SymbolValue::Zero;
}

SymbolValue symbol(const SymbolQuery& q) {
  q.validate();
  return classify_power(mod_pow(q.a, q.k, q.n), q.n);
}

SymbolValue symbol_via_crt(const SymbolQuery& q, const FactoredInteger& n_factored) {
  q.validate();
  if (n_factored.value() != q.n)
    throw DomainError("factorization is for " + std::to_string(n_factored.value()) +
                      ", query modulus is " + std::to_string(q.n));
  bool all_plus = true;
  bool all_minus = true;
  for (const auto& [p, e] : n_factored.factors()) {
    u64 pe = 1;
    for (unsigned i = 0; i < e; ++i) pe *= p;
    const u64 r = mod_pow(q.a, q.k, pe);
    all_plus = all_plus && r == 1 % pe;
    all_minus = all_minus && r == pe - 1;
    if (!all_plus && !all_minus) return SymbolValue::Zero;
  }
  if (all_plus) return SymbolValue::PlusOne;
  return all_minus ? SymbolValue::MinusOne : SymbolValue::Zero;
}

SymbolValue symbol_via_order(const SymbolQuery& q) {
  q.validate();
  return symbol_via_order(q, factorize(carmichael_lambda(factorize(q.n))));
}

SymbolValue symbol_via_order(const SymbolQuery& q, const FactoredInteger& lambda_factored) {
  q.validate();
  const u64 a = normalize(q.a, q.n);
  if (gcd(a, q.n) != 1) return SymbolValue::Zero;
  const OrderInfo info = multiplicative_order(static_cast<i64>(a), q.n, lambda_factored, q.k);
  return classify_by_order(a, q.n, info.order, q.k);
}

SymbolValue classify_by_order(u64 a, u64 n, u64 order, u64 k) {
  if (k % order == 0) return SymbolValue::PlusOne;
  const bool divides_2k = (static_cast<unsigned __int128>(k) * 2) % order == 0;
  if (divides_2k && mod_pow_u(a, k, n) == n - 1) return SymbolValue::MinusOne;
  return SymbolValue::Zero;
}

SymbolValue negate_argument(const SymbolQuery& q) {
  const SymbolValue base = symbol(q);
  SymbolValue v = (q.k % 2 == 0) ? base : -base;
  if (q.n == 2 && v == SymbolValue::MinusOne) v = SymbolValue::PlusOne;
  return v;
}

SymbolValue invert_argument(const SymbolQuery& q) {
  q.validate();
  const u64 inv = mod_inverse(q.a, q.n);
  const SymbolValue v = symbol({static_cast<i64>(inv), q.n, q.k});
  if (v != symbol(q))
    throw InvariantError("inverse symmetry violated at a=" + std::to_string(q.a) +
                         " n=" + std::to_string(q.n) + " k=" + std::to_string(q.k));
  return v;
}

SymbolValue power_compat(i64 a, u64 t, u64 n, u64 k) {
  if (t < 1) throw DomainError("power t must be >= 1");
  const SymbolQuery base{a, n, k};
  base.validate();
  const auto tk = static_cast<unsigned __int128>(t) * k;
  if (tk > UINT64_MAX) throw DomainError("t*k overflows 64 bits");
  const SymbolValue v = symbol({static_cast<i64>(mod_pow(a, t, n)), n, k});
  if (v != symbol({a, n, static_cast<u64>(tk)}))
    throw InvariantError("power compatibility violated at a=" + std::to_string(a) +
                         " t=" + std::to_string(t) + " n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
  return v;
}

bool is_in_sign_subgroup(i64 a, u64 n, u64 k) {
  const SymbolQuery q{a, n, k};
  q.validate();
  if (gcd(normalize(a, n), n) != 1) return false;
  return symbol(q) != SymbolValue::Zero;
}

}  // namespace expcong
