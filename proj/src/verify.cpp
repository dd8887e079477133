#include "expcong/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "expcong/analytic.hpp"
#include "expcong/classical.hpp"
#include "expcong/error.hpp"
#include "expcong/symbol.hpp"

namespace expcong {

namespace {

// Accumulates check counts and keeps the first counterexample.
class Suite {
 public:
  explicit Suite(const TheoremInfo& info) {
    result_.id = std::string(info.id);
    result_.reference = std::string(info.reference);
    result_.expected_failure = info.expected_failure;
    result_.passed = true;
  }

  // Returns false once a failure has been recorded, so loops can bail out.
  template <typename Detail>
  bool check(bool ok, Detail&& detail) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = detail();
    }
    return result_.passed;
  }

  bool ok() const { return result_.passed; }
  void note(std::string text) {
    if (result_.passed) result_.detail = std::move(text);
  }
  TheoremResult finish() { return std::move(result_); }

 private:
  TheoremResult result_;
};

std::string triple(const char* label, i64 a, u64 n, u64 k) {
  std::ostringstream os;
  os << label << " (a=" << a << ", n=" << n << ", k=" << k << ")";
  return os.str();
}

u64 naive_pow(u64 a, u64 e, u64 n) {
  u64 r = 1 % n;
  for (u64 i = 0; i < e; ++i) r = r * (a % n) % n;
  return r;
}

using Runner = std::function<void(Suite&, const VerifyScale&, const EnumerationOptions&)>;

// ---- arith -----------------------------------------------------------------

void run_modpow(Suite& s, const VerifyScale&, const EnumerationOptions&) {
  for (u64 n = 1; n <= 100; ++n)
    for (i64 a = -20; a <= 20; ++a)
      for (u64 e = 0; e <= 20; ++e) {
        const u64 base = normalize(a, n);
        if (!s.check(mod_pow(a, e, n) == naive_pow(base, e, n),
                     [&] { return triple("mod_pow mismatch", a, n, e); }))
          return;
      }
}

void run_totient(Suite& s, const VerifyScale& sc, const EnumerationOptions&) {
  for (u64 n = 1; n <= sc.arith_max_n; ++n) {
    u64 count = 0;
    for (u64 a = 1; a <= n; ++a) count += gcd(a, n) == 1;
    if (!s.check(euler_phi(factorize(n)) == count, [&] { return "phi mismatch at n=" + std::to_string(n); }))
      return;
  }
}

void run_carmichael(Suite& s, const VerifyScale& sc, const EnumerationOptions&) {
  for (u64 n = 1; n <= sc.arith_max_n; ++n) {
    const FactoredInteger f = factorize(n);
    const u64 lambda = carmichael_lambda(f);
    u64 order_lcm = 1;
    for (u64 a = 1; a < n; ++a) {
      if (gcd(a, n) != 1) continue;
      if (!s.check(mod_pow_u(a, lambda, n) == 1,
                   [&] { return triple("a^lambda != 1", static_cast<i64>(a), n, lambda); }))
        return;
      if (n <= sc.symbol_max_n) order_lcm = lcm(order_lcm, multiplicative_order(static_cast<i64>(a), f).order);
    }
    if (n >= 2 && n <= sc.symbol_max_n &&
        !s.check(order_lcm == lambda, [&] { return "lambda is not the lcm of orders at n=" + std::to_string(n); }))
      return;
  }
}

void run_order(Suite& s, const VerifyScale& sc, const EnumerationOptions&) {
  for (u64 n = 2; n <= sc.symbol_max_n; ++n) {
    const u64 lambda = carmichael_lambda(factorize(n));
    const FactoredInteger lf = factorize(lambda);
    for (u64 a = 1; a < n; ++a) {
      if (gcd(a, n) != 1) continue;
      const u64 d = multiplicative_order(static_cast<i64>(a), n, lf).order;
      bool minimal = mod_pow_u(a, d, n) == 1 && lambda % d == 0;
      const FactoredInteger df = factorize(d);
      for (const auto& [q, e] : df.factors()) minimal = minimal && mod_pow_u(a, d / q, n) != 1;
      if (!s.check(minimal, [&] { return triple("order not minimal", static_cast<i64>(a), n, d); })) return;
    }
  }
}

void run_crt(Suite& s, const VerifyScale&, const EnumerationOptions&) {
  for (u64 n1 = 1; n1 <= 40; ++n1)
    for (u64 n2 = 1; n2 <= 40; ++n2) {
      if (gcd(n1, n2) != 1) continue;
      for (u64 r1 = 0; r1 < n1; ++r1)
        for (u64 r2 = 0; r2 < n2; ++r2) {
          const Congruence sys[] = {{r1, n1}, {r2, n2}};
          const Congruence x = crt_combine(sys);
          if (!s.check(x.modulus == n1 * n2 && x.residue < x.modulus && x.residue % n1 == r1 && x.residue % n2 == r2,
                       [&] {
                         return "CRT failed for " + std::to_string(r1) + " mod " + std::to_string(n1) + ", " +
                                std::to_string(r2) + " mod " + std::to_string(n2);
                       }))
            return;
        }
    }
  const Congruence sys[] = {{2, 3}, {3, 5}, {2, 7}};
  s.check(crt_combine(sys).residue == 23, [] { return std::string("CRT of (2,3),(3,5),(2,7) is not 23"); });
}

void run_factorize(Suite& s, const VerifyScale& sc, const EnumerationOptions&) {
  auto verify_one = [&](u64 n) {
    const FactoredInteger f = factorize(n);
    unsigned __int128 product = 1;
    bool ok = true;
    for (const auto& [p, e] : f.factors()) {
      ok = ok && is_prime(p);
      for (unsigned i = 0; i < e; ++i) product *= p;
    }
    return s.check(ok && product == n, [&] { return "bad factorization of " + std::to_string(n); });
  };
  for (u64 n = 1; n <= sc.arith_max_n; ++n)
    if (!verify_one(n)) return;
  const u64 large[] = {(u64{1} << 61) - 1, 4611686014132420609ULL /* (2^31-1)^2 */,
                       999999000001ULL * 3, 1000000007ULL * 998244353ULL, u64{1} << 62,
                       4611685283988009527ULL};
  for (u64 n : large)
    if (!verify_one(n)) return;
}

// ---- symbol ----------------------------------------------------------------

void run_path_equivalence(Suite& s, const VerifyScale& sc, const EnumerationOptions&) {
  for (u64 n = 2; n <= sc.symbol_max_n; ++n) {
    const FactoredInteger f = factorize(n);
    const FactoredInteger lf = factorize(carmichael_lambda(f));
    for (u64 a = 0; a < n; ++a) {
      const auto ai = static_cast<i64>(a);
      const bool unit = gcd(a, n) == 1;
      const u64 order = unit ? multiplicative_order(ai, n, lf).order : 0;
      for (u64 k = 1; k <= sc.symbol_max_k; ++k) {
        const SymbolQuery q{ai, n, k};
        const SymbolValue direct = symbol(q);
        const SymbolValue crt = symbol_via_crt(q, f);
        const SymbolValue ord = (k == 1 || !unit) ? symbol_via_order(q, lf) : classify_by_order(a, n, order, k);
        if (!s.check(direct == crt && crt == ord, [&] { return triple("paths disagree", ai, n, k); })) return;
      }
    }
  }
}

void run_residue_class(Suite& s, const VerifyScale& sc, const EnumerationOptions&) {
  for (u64 n = 2; n <= sc.symbol_max_n; ++n)
    for (u64 a = 0; a < n; ++a)
      for (u64 k = 1; k <= sc.symbol_max_k; ++k) {
        const auto ai = static_cast<i64>(a);
        const auto ni = static_cast<i64>(n);
        const SymbolValue v = symbol({ai, n, k});
        if (!s.check(v == symbol({ai + ni, n, k}) && v == symbol({ai - ni, n, k}),
                     [&] { return triple("shift by n changes symbol", ai, n, k); }))
          return;
      }
}

void run_invertibility(Suite& s, const VerifyScale& sc, const EnumerationOptions&) {
  for (u64 n = 2; n <= sc.symbol_max_n; ++n)
    for (u64 a = 0; a < n; ++a) {
      if (gcd(a, n) == 1) continue;
      for (u64 k = 1; k <= sc.symbol_max_k; ++k)
        if (!s.check(symbol({static_cast<i64>(a), n, k}) == SymbolValue::Zero,
                     [&] { return triple("nonzero symbol on a non-unit", static_cast<i64>(a), n, k); }))
          return;
    }
}

void run_periodicity(Suite& s, const VerifyScale& sc, const EnumerationOptions&) {
  for (u64 n = 2; n <= sc.symbol_max_n; ++n) {
    const FactoredInteger lf = factorize(carmichael_lambda(factorize(n)));
    for (u64 a = 1; a < n; ++a) {
      if (gcd(a, n) != 1) continue;
      const auto ai = static_cast<i64>(a);
      const u64 r = multiplicative_order(ai, n, lf).order;
      for (u64 k = 1; k <= sc.symbol_max_k; ++k) {
        const SymbolValue v = symbol({ai, n, k});
        for (u64 j = 1; j <= 3; ++j)
          if (!s.check(v == symbol({ai, n, k + j * r}), [&] { return triple("not periodic in k", ai, n, k); }))
            return;
      }
    }
  }
}

void run_inverse(Suite& s, const VerifyScale& sc, const EnumerationOptions&) {
  for (u64 n = 2; n <= sc.symbol_max_n; ++n)
    for (u64 a = 1; a < n; ++a) {
      if (gcd(a, n) != 1) continue;
      for (u64 k = 1; k <= sc.symbol_max_k; ++k) {
        const SymbolQuery q{static_cast<i64>(a), n, k};
        bool ok;
        try {
          ok = invert_argument(q) == symbol(q);
        } catch (const InvariantError&) {
          ok = false;
        }
        if (!s.check(ok, [&] { return triple("inverse symmetry fails", q.a, n, k); })) return;
      }
    }
}

void run_negation(Suite& s, const VerifyScale& sc, const EnumerationOptions&) {
  for (u64 n = 2; n <= sc.symbol_max_n; ++n)
    for (u64 a = 0; a < n; ++a)
      for (u64 k = 1; k <= sc.symbol_max_k; ++k) {
        const auto ai = static_cast<i64>(a);
        if (!s.check(negate_argument({ai, n, k}) == symbol({-ai, n, k}),
                     [&] { return triple("negation rule fails", ai, n, k); }))
          return;
      }
}

void run_power_compat(Suite& s, const VerifyScale& sc, const EnumerationOptions&) {
  for (u64 n = 2; n <= sc.symbol_max_n; ++n)
    for (u64 a = 0; a < n; ++a)
      for (u64 k = 1; k <= sc.symbol_max_k; ++k)
        for (u64 t = 2; t <= 3; ++t) {
          const auto ai = static_cast<i64>(a);
          bool ok;
          try {
            ok = power_compat(ai, t, n, k) == symbol({ai, n, t * k});
          } catch (const InvariantError&) {
            ok = false;
          }
          if (!s.check(ok, [&] { return triple("power compatibility fails", ai, n, k) + " t=" + std::to_string(t); }))
            return;
        }
}

void run_restricted_multiplicativity(Suite& s, const VerifyScale& sc, const EnumerationOptions&) {
  std::vector<signed char> table;
  std::vector<u64> members;
  for (u64 n = 2; n <= sc.symbol_max_n; ++n)
    for (u64 k = 1; k <= sc.symbol_max_k; ++k) {
      table.assign(n, 0);
      members.clear();
      for (u64 a = 0; a < n; ++a) {
        table[a] = static_cast<signed char>(to_int(symbol({static_cast<i64>(a), n, k})));
        if (is_in_sign_subgroup(static_cast<i64>(a), n, k)) members.push_back(a);
      }
      for (u64 a : members)
        for (u64 b : members) {
          const u64 ab = a * b % n;
          if (!s.check(table[ab] == table[a] * table[b] && table[ab] != 0, [&] {
                return triple("not a homomorphism on A_{n,k}", static_cast<i64>(a), n, k) + " b=" + std::to_string(b);
              }))
            return;
        }
    }
}

void run_multiplicativity_witness(Suite& s, const VerifyScale&, const EnumerationOptions&) {
  // Unrestricted multiplicativity over all units is false: 2*3 = 6 = 1 mod 5.
  const SymbolValue prod = symbol({6, 5, 1});
  const SymbolValue factors = symbol({2, 5, 1}) * symbol({3, 5, 1});
  s.check(prod == SymbolValue::PlusOne && factors == SymbolValue::Zero,
          [] { return std::string("counterexample (a,b,n,k)=(2,3,5,1) not reproduced"); });
  s.note("counterexample reproduced: (6/5)_1 = +1 but (2/5)_1 * (3/5)_1 = 0");
}

void run_order_shortcut(Suite& s, const VerifyScale& sc, const EnumerationOptions&) {
  u64 noncyclic = 0;
  for (u64 n = 2; n <= sc.symbol_max_n; ++n) {
    const FactoredInteger f = factorize(n);
    const FactoredInteger lf = factorize(carmichael_lambda(f));
    bool shortcut_fails = false;
    for (u64 a = 1; a < n && !shortcut_fails; ++a) {
      if (gcd(a, n) != 1) continue;
      const u64 d = multiplicative_order(static_cast<i64>(a), n, lf).order;
      for (u64 k = 1; k <= sc.symbol_max_k; ++k)
        if (k % d != 0 && (2 * k) % d == 0 && mod_pow_u(a, k, n) != n - 1) {
          shortcut_fails = true;
          break;
        }
    }
    const bool cyclic = has_cyclic_unit_group(f);
    noncyclic += !cyclic;
    if (!s.check(shortcut_fails == !cyclic,
                 [&] { return "order shortcut behaviour does not track cyclicity at n=" + std::to_string(n); }))
      return;
  }
  s.note("d | 2k, d !| k implies a^k = -1 exactly on cyclic unit groups; fails on all " + std::to_string(noncyclic) +
         " non-cyclic moduli");
}

// ---- partition -------------------------------------------------------------

void run_prime_count(Suite& s, const VerifyScale& sc, const EnumerationOptions& opt) {
  for (u64 p = 3; p < sc.prime_count_max_p; p += 2) {
    if (!is_prime(p)) continue;
    for (u64 k = 1; k <= sc.prime_count_max_k; ++k) {
      const ResiduePartition part = enumerate_partition(p, k, opt);
      const PrimeCountReport r = prime_counts(p, k);
      if (!s.check(part.r_plus.size() == r.count_plus && part.r_minus.size() == r.count_minus,
                   [&] { return "count formula fails at p=" + std::to_string(p) + " k=" + std::to_string(k); }))
        return;
    }
  }
}

void run_partition(Suite& s, const VerifyScale& sc, const EnumerationOptions& opt) {
  for (u64 n = 2; n <= sc.symbol_max_n; ++n) {
    const u64 phi = euler_phi(factorize(n));
    for (u64 k = 1; k <= sc.symbol_max_k; ++k) {
      const ResiduePartition p = enumerate_partition(n, k, opt);
      std::vector<u64> all;
      all.insert(all.end(), p.r_plus.begin(), p.r_plus.end());
      all.insert(all.end(), p.r_minus.begin(), p.r_minus.end());
      all.insert(all.end(), p.r_zero.begin(), p.r_zero.end());
      std::sort(all.begin(), all.end());
      std::vector<u64> units;
      for (u64 a = 1; a < n; ++a)
        if (gcd(a, n) == 1) units.push_back(a);
      const bool sorted = std::is_sorted(p.r_plus.begin(), p.r_plus.end()) &&
                          std::is_sorted(p.r_minus.begin(), p.r_minus.end()) &&
                          std::is_sorted(p.r_zero.begin(), p.r_zero.end());
      const bool sizes = p.unit_count() == phi && p.non_units == n - phi &&
                         (p.r_minus.empty() || p.r_minus.size() == p.r_plus.size());
      if (!s.check(all == units && sorted && sizes,
                   [&] { return "partition malformed at n=" + std::to_string(n) + " k=" + std::to_string(k); }))
        return;
    }
  }
}

void run_subgroup_coset(Suite& s, const VerifyScale& sc, const EnumerationOptions& opt) {
  std::vector<bool> in_h;
  for (u64 n = 2; n <= sc.symbol_max_n; ++n)
    for (u64 k = 1; k <= sc.symbol_max_k; ++k) {
      const ResiduePartition p = enumerate_partition(n, k, opt);
      in_h.assign(n, false);
      for (u64 h : p.r_plus) in_h[h] = true;
      bool closed = in_h[1 % n];
      for (u64 a : p.r_plus) {
        for (u64 b : p.r_plus)
          if (!in_h[a * b % n]) {
            closed = false;
            break;
          }
        if (!closed) break;
      }
      bool cosets = true;
      if (!p.r_minus.empty())
        for (u64 g : {p.r_minus.front(), p.r_minus.back()}) cosets = cosets && coset(g, p.r_plus, n) == p.r_minus;
      if (!s.check(closed && cosets, [&] {
            return "R+1 not a subgroup or R-1 not its coset at n=" + std::to_string(n) + " k=" + std::to_string(k);
          }))
        return;
    }
}

void run_index_two(Suite& s, const VerifyScale& sc, const EnumerationOptions& opt) {
  u64 with_minus = 0, index_two_in_units = 0;
  for (u64 n = 2; n <= sc.symbol_max_n; ++n)
    for (u64 k = 1; k <= sc.symbol_max_k; ++k) {
      const ResiduePartition p = enumerate_partition(n, k, opt);
      bool exists_minus = false;
      for (u64 g = 1; g < n && !exists_minus; ++g)
        exists_minus = gcd(g, n) == 1 && classify_power(mod_pow_u(g, k, n), n) == SymbolValue::MinusOne;
      IndexTwoReport r;
      bool ok;
      try {
        r = index_two_check(p);
        ok = r.holds == exists_minus;
      } catch (const InvariantError&) {
        ok = false;
      }
      if (!s.check(ok, [&] { return "index-two structure fails at n=" + std::to_string(n) + " k=" + std::to_string(k); }))
        return;
      if (r.holds) {
        ++with_minus;
        index_two_in_units += r.unit_count == 2 * r.subgroup_size;
      }
    }
  s.note("H has index two in H u gH in all " + std::to_string(with_minus) + " cases with R-1 nonempty; index two in "
         "the full unit group in only " + std::to_string(index_two_in_units));
}

void run_primitive_root(Suite& s, const VerifyScale& sc, const EnumerationOptions&) {
  for (u64 p = 3; p < sc.primitive_root_max_p; p += 2) {
    if (!is_prime(p)) continue;
    for (u64 k = 1; k <= sc.primitive_root_max_k; ++k)
      for (u64 a = 1; a < p; ++a) {
        const auto ai = static_cast<i64>(a);
        bool ok;
        try {
          ok = symbol_by_primitive_root(ai, p, k) == symbol({ai, p, k});
        } catch (const InvariantError&) {
          ok = false;
        }
        if (!s.check(ok, [&] { return triple("primitive-root rule fails", ai, p, k); })) return;
      }
  }
}

void run_solvability(Suite& s, const VerifyScale& sc, const EnumerationOptions& opt) {
  for (u64 n = 2; n <= sc.symbol_max_n; ++n)
    for (u64 k = 1; k <= sc.symbol_max_k; ++k) {
      const ResiduePartition p = enumerate_partition(n, k, opt);
      bool ok = true;
      for (u64 a : p.r_plus) ok = ok && mod_pow_u(a, k, n) == 1 % n;
      for (u64 a : p.r_minus) ok = ok && mod_pow_u(a, k, n) == n - 1 && n - 1 != 1;
      for (u64 a : p.r_zero) ok = ok && mod_pow_u(a, k, n) != 1 % n && mod_pow_u(a, k, n) != n - 1;
      if (!s.check(ok, [&] { return "class does not match a^k at n=" + std::to_string(n) + " k=" + std::to_string(k); }))
        return;
    }
}

void run_worked_example(Suite& s, const VerifyScale&, const EnumerationOptions& opt) {
  const ResiduePartition p = enumerate_partition(15, 2, opt);
  s.check(p.r_plus == std::vector<u64>{1, 4, 11, 14} && p.r_minus.empty() && p.r_zero.size() == 4,
          [] { return std::string("partition(15, 2) differs from R+1={1,4,11,14}, R-1={}"); });
  s.check(symbol({2, 5, 2}) == SymbolValue::MinusOne, [] { return std::string("(2/5)_2 != -1"); });
}

// ---- classical -------------------------------------------------------------

void run_legendre(Suite& s, const VerifyScale& sc, const EnumerationOptions& opt) {
  for (u64 p = 3; p < sc.legendre_max_p; p += 2) {
    if (!is_prime(p)) continue;
    const LegendreCoincidence c = legendre_coincidence(p, opt);
    if (!s.check(c.all_agree(), [&] {
          return triple("symbol differs from Legendre", c.first_mismatch, p, (p - 1) / 2);
        }))
      return;
  }
}

void run_legendre_multiplicativity(Suite& s, const VerifyScale& sc, const EnumerationOptions&) {
  for (u64 p = 3; p < sc.primitive_root_max_p; p += 2) {
    if (!is_prime(p)) continue;
    for (u64 a = 1; a < p; ++a)
      for (u64 b = 1; b < p; ++b) {
        const auto ai = static_cast<i64>(a);
        const auto bi = static_cast<i64>(b);
        if (!s.check(legendre(ai * bi, p) == legendre(ai, p) * legendre(bi, p),
                     [&] { return triple("Legendre not multiplicative", ai, p, b); }))
          return;
      }
  }
}

void run_jacobi_product(Suite& s, const VerifyScale& sc, const EnumerationOptions&) {
  for (u64 n = 1; n <= sc.symbol_max_n; n += 2) {
    const FactoredInteger f = factorize(n);
    for (u64 a = 0; a < n; ++a) {
      const auto ai = static_cast<i64>(a);
      int expected = 1;
      for (const auto& [p, e] : f.factors())
        for (unsigned i = 0; i < e; ++i) expected *= to_int(legendre(ai, p));
      if (!s.check(to_int(jacobi(ai, n)) == expected,
                   [&] { return triple("Jacobi differs from Legendre product", ai, n, 0); }))
        return;
    }
  }
}

void run_jacobi_relation_witness(Suite& s, const VerifyScale&, const EnumerationOptions& opt) {
  const JacobiCompatibility jc = jacobi_compatibility(15, opt);
  const bool witness = symbol({7, 15, 4}) == SymbolValue::PlusOne && jacobi(7, 15) == SymbolValue::MinusOne;
  s.check(witness && jc.count(SymbolValue::PlusOne, SymbolValue::MinusOne) > 0,
          [] { return std::string("pointwise inequality witness (7, 15, phi/2) not reproduced"); });
  s.note("(7/15)_4 = +1 but Jacobi (7/15) = -1; n=15 agrees on " + std::to_string(jc.agreements()) + " of " +
         std::to_string(jc.total()) + " units");
}

void run_power_residue(Suite& s, const VerifyScale& sc, const EnumerationOptions&) {
  for (u64 p = 3; p < sc.power_residue_max_p; ++p) {
    if (!is_prime(p)) continue;
    for (u64 m = 2; m <= p - 1; ++m) {
      if ((p - 1) % m != 0) continue;
      std::vector<bool> is_power(p, false);
      for (u64 b = 1; b < p; ++b) is_power[mod_pow_u(b, m, p)] = true;
      for (u64 a = 1; a < p; ++a)
        if (!s.check(power_residue_test(static_cast<i64>(a), p, m) == is_power[a],
                     [&] { return triple("m-th power test fails", static_cast<i64>(a), p, m); }))
          return;
    }
  }
}

// ---- analytic --------------------------------------------------------------

void run_orthogonality(Suite& s, const VerifyScale& sc, const EnumerationOptions& opt) {
  for (u64 n = 2; n <= sc.symbol_max_n; ++n)
    for (u64 k = 1; k <= sc.symbol_max_k; ++k) {
      const ResiduePartition p = enumerate_partition(n, k, opt);
      i64 direct = 0;
      for (u64 a = 0; a < n; ++a) direct += to_int(chi(static_cast<i64>(a), n, k));
      const i64 expected = p.r_minus.empty() ? static_cast<i64>(p.r_plus.size()) : 0;
      bool ok;
      try {
        ok = orthogonality_sum(p) == expected && direct == expected;
      } catch (const InvariantError&) {
        ok = false;
      }
      if (!s.check(ok, [&] { return "orthogonality fails at n=" + std::to_string(n) + " k=" + std::to_string(k); }))
        return;
    }
}

void run_expsum_zero(Suite& s, const VerifyScale& sc, const EnumerationOptions& opt) {
  for (u64 n = 2; n <= sc.expsum_max_n; ++n)
    for (u64 k = 1; k <= sc.expsum_max_k; ++k) {
      const ResiduePartition p = enumerate_partition(n, k, opt);
      const ComplexSample v = exp_sum(0, p);
      const double expected = static_cast<double>(p.r_plus.size()) - static_cast<double>(p.r_minus.size());
      if (!s.check(std::abs(v - ComplexSample{expected, 0.0}) <= 1e-12,
                   [&] { return "S(0) != |R+1| - |R-1| at n=" + std::to_string(n) + " k=" + std::to_string(k); }))
        return;
    }
}

void run_expsum_conjugate(Suite& s, const VerifyScale& sc, const EnumerationOptions& opt) {
  const u64 max_n = std::min<u64>(sc.expsum_max_n, 150);
  for (u64 n = 2; n <= max_n; ++n)
    for (u64 k = 1; k <= sc.expsum_max_k; ++k) {
      const ResiduePartition p = enumerate_partition(n, k, opt);
      for (i64 m = 0; m < static_cast<i64>(n); ++m)
        if (!s.check(std::abs(exp_sum(-m, p) - std::conj(exp_sum(m, p))) <= 1e-12,
                     [&] { return triple("S(-m) != conj S(m)", m, n, k); }))
          return;
    }
}

void run_expsum_bound(Suite& s, const VerifyScale& sc, const EnumerationOptions& opt) {
  for (u64 n = 2; n <= sc.expsum_max_n; ++n)
    for (u64 k = 1; k <= sc.expsum_max_k; ++k) {
      const ExpSumBoundReport r = exp_sum_bound_check(n, k, 0, static_cast<i64>(n) - 1, opt);
      if (!s.check(r.all_within && r.bound <= r.phi,
                   [&] { return triple("|S(m)| exceeds |R+1|+|R-1|", r.worst_m, n, k); }))
        return;
    }
  const ComplexSample v = exp_sum(1, 5, 2, opt);
  s.check(std::abs(v.real() - std::sqrt(5.0)) <= 1e-9 && std::abs(v.imag()) <= 1e-9,
          [] { return std::string("S(1) for n=5, k=2 is not sqrt(5)"); });
}

void run_series_tail(Suite& s, const VerifyScale&, const EnumerationOptions& opt) {
  const std::pair<u64, u64> cases[] = {{5, 2}, {15, 2}, {7, 3}, {8, 1}, {13, 4}};
  const ComplexSample points[] = {{1.5, 0.0}, {2.0, 0.0}, {3.0, 0.0}, {2.0, 5.0}};
  for (const auto& [n, k] : cases)
    for (const ComplexSample sv : points)
      for (u64 m : {u64{100}, u64{1000}, u64{10000}}) {
        const SeriesSample a = l_series_partial(sv, n, k, m, opt.jobs);
        const SeriesSample b = l_series_partial(sv, n, k, 2 * m, opt.jobs);
        if (!s.check(std::abs(a.partial_sum - b.partial_sum) <= a.tail_bound,
                     [&] { return "tail bound violated at n=" + std::to_string(n) + " M=" + std::to_string(m); }))
          return;
      }
}

void run_euler_product(Suite& s, const VerifyScale&, const EnumerationOptions& opt) {
  for (u64 p : {u64{3}, u64{5}, u64{7}, u64{11}, u64{13}}) {
    const EulerComparison c = euler_product_comparison({2.0, 0.0}, p, (p - 1) / 2, 10000, 100000, opt);
    if (!s.check(c.totally_multiplicative && c.within_bound,
                 [&] { return "Euler product disagrees with the series in the Legendre case p=" + std::to_string(p); }))
      return;
  }
}

void run_euler_breakage(Suite& s, const VerifyScale&, const EnumerationOptions& opt) {
  const EulerComparison c = euler_product_comparison({2.0, 0.0}, 15, 2, 1000, 100000, opt);
  s.check(!c.totally_multiplicative && c.discrepancy > c.combined_bound,
          [] { return std::string("expected Euler-product discrepancy for n=15, k=2 not observed"); });
  std::ostringstream os;
  os << "n=15 k=2 s=2: |product - series| = " << c.discrepancy << " > bound " << c.combined_bound;
  s.note(os.str());
}

struct Entry {
  TheoremInfo info;
  Runner run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"modpow", "Modular exponentiation against repeated multiplication", false}, run_modpow},
      {{"totient", "Euler phi against unit counting", false}, run_totient},
      {{"carmichael", "Carmichael lambda is the least universal exponent", false}, run_carmichael},
      {{"order", "Multiplicative order is minimal and divides lambda", false}, run_order},
      {{"crt", "CRT reconstruction inverts reduction", false}, run_crt},
      {{"factorize", "Factorization reconstructs n with prime factors", false}, run_factorize},
      {{"path-equivalence", "Direct, CRT and order-based evaluation agree", false}, run_path_equivalence},
      {{"residue-class", "Dependence only on residue class", false}, run_residue_class},
      {{"invertibility", "Invertibility is necessary", false}, run_invertibility},
      {{"periodicity", "Periodicity in the exponent", false}, run_periodicity},
      {{"inverse", "Inverse and sign symmetry", false}, run_inverse},
      {{"negation", "Symmetry property under a -> -a", false}, run_negation},
      {{"power-compat", "Power-compatibility", false}, run_power_compat},
      {{"restricted-multiplicativity", "Multiplicativity on A_{n,k}", false}, run_restricted_multiplicativity},
      {{"multiplicativity", "Multiplicativity in a (unrestricted; counterexample)", true}, run_multiplicativity_witness},
      {{"order-shortcut", "Order criterion for -1 holds exactly on cyclic unit groups", false}, run_order_shortcut},
      {{"prime-count", "Counting residues for prime modulus", false}, run_prime_count},
      {{"partition", "Partition of residue classes", false}, run_partition},
      {{"subgroup-coset", "Subgroup of k-sign elements and membership criterion", false}, run_subgroup_coset},
      {{"index-two", "Index-two subgroup", false}, run_index_two},
      {{"primitive-root", "Symbol via primitive roots", false}, run_primitive_root},
      {{"solvability", "Symbol and solvability of a^k = +-1", false}, run_solvability},
      {{"worked-example", "Composite modulus n = 15, k = 2", false}, run_worked_example},
      {{"legendre", "Quadratic residues: symbol at k = (p-1)/2 is Legendre", false}, run_legendre},
      {{"legendre-multiplicativity", "Legendre symbol is completely multiplicative", false},
       run_legendre_multiplicativity},
      {{"jacobi-product", "Jacobi symbol equals the Legendre product", false}, run_jacobi_product},
      {{"jacobi-relation", "Jacobi relation (pointwise equality fails)", true}, run_jacobi_relation_witness},
      {{"power-residue", "Cubic and higher residues", false}, run_power_residue},
      {{"orthogonality", "Orthogonality relation", false}, run_orthogonality},
      {{"expsum-zero", "Weighted exponential sum at m = 0", false}, run_expsum_zero},
      {{"expsum-conjugate", "Weighted exponential sum conjugate symmetry", false}, run_expsum_conjugate},
      {{"expsum-bound", "Bound on symbolic exponential sum", false}, run_expsum_bound},
      {{"series-tail", "Dirichlet series partial sums within tail bound", false}, run_series_tail},
      {{"euler-product", "Euler product in the Legendre case", false}, run_euler_product},
      {{"euler-product-breakage", "Euler product when chi vanishes on units (discrepancy)", true}, run_euler_breakage},
  };
  return entries;
}

}  // namespace

VerifyScale VerifyScale::quick() {
  VerifyScale s;
  s.symbol_max_n = 200;
  s.symbol_max_k = 12;
  s.arith_max_n = 1000;
  s.prime_count_max_p = 200;
  s.prime_count_max_k = 30;
  s.legendre_max_p = 300;
  s.power_residue_max_p = 100;
  s.primitive_root_max_p = 60;
  s.primitive_root_max_k = 20;
  s.expsum_max_n = 60;
  s.expsum_max_k = 6;
  return s;
}

bool VerifyReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const TheoremResult& r) { return r.passed; });
}

const TheoremResult* VerifyReport::first_failure() const {
  for (const auto& r : results)
    if (!r.passed) return &r;
  return nullptr;
}

const std::vector<TheoremInfo>& theorem_catalog() {
  static const std::vector<TheoremInfo> catalog = [] {
    std::vector<TheoremInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return catalog;
}

VerifyReport run_verification(const std::vector<std::string>& ids, const VerifyScale& scale,
                              const EnumerationOptions& options) {
  std::vector<const Entry*> selected;
  if (ids.empty()) {
    for (const auto& e : registry()) selected.push_back(&e);
  } else {
    for (const auto& id : ids) {
      const auto it = std::find_if(registry().begin(), registry().end(),
                                   [&](const Entry& e) { return e.info.id == id; });
      if (it == registry().end()) throw DomainError("unknown theorem id: " + id);
      selected.push_back(&*it);
    }
  }

  EnumerationOptions sequential = options;
  sequential.jobs = 1;
  sequential.max_n = std::max(options.max_n, std::max(scale.symbol_max_n, scale.legendre_max_p));

  VerifyReport report;
  for (const Entry* e : selected) {
    Suite suite(e->info);
    try {
      e->run(suite, scale, sequential);
    } catch (const std::exception& ex) {
      suite.check(false, [&] { return std::string("unexpected exception: ") + ex.what(); });
    }
    report.results.push_back(suite.finish());
  }
  return report;
}

}  // namespace expcong
