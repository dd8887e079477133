#include "expcong/partition.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "expcong/error.hpp"

namespace expcong {

namespace {

struct Chunk {
  std::vector<u64> plus, minus, zero;
  u64 non_units = 0;
};

void scan_range(u64 lo, u64 hi, u64 n, u64 k, Chunk& out) {
  for (u64 a = lo; a < hi; ++a) {
    if (gcd(a, n) != 1) {
      ++out.non_units;
      continue;
    }
    switch (classify_power(mod_pow_u(a, k, n), n)) {
      case SymbolValue::PlusOne: out.plus.push_back(a); break;
      case SymbolValue::MinusOne: out.minus.push_back(a); break;
      case SymbolValue::Zero: out.zero.push_back(a); break;
    }
  }
}

}  // namespace

void check_enumeration_cap(u64 n, const EnumerationOptions& options) {
  if (n > options.max_n)
    throw ResourceError("modulus " + std::to_string(n) + " exceeds enumeration cap " +
                        std::to_string(options.max_n) + " (raise with --max-n or EXPCONG_MAX_N)");
}

ResiduePartition enumerate_partition(u64 n, u64 k, const EnumerationOptions& options) {
  SymbolQuery{0, n, k}.validate();
  check_enumeration_cap(n, options);

  const u64 jobs = std::clamp<u64>(options.jobs, 1, std::max<u64>(1, n / 1024));
  std::vector<Chunk> chunks(jobs);
  const u64 span = n / jobs;
  auto bounds = [&](u64 i) {
    return std::pair<u64, u64>{i * span, i + 1 == jobs ? n : (i + 1) * span};
  };
  if (jobs == 1) {
    scan_range(0, n, n, k, chunks[0]);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (u64 i = 0; i < jobs; ++i) {
      const auto [lo, hi] = bounds(i);
      workers.emplace_back([&, lo, hi, i] { scan_range(lo, hi, n, k, chunks[i]); });
    }
  }

  ResiduePartition out;
  out.n = n;
  out.k = k;
  for (auto& c : chunks) {
    out.r_plus.insert(out.r_plus.end(), c.plus.begin(), c.plus.end());
    out.r_minus.insert(out.r_minus.end(), c.minus.begin(), c.minus.end());
    out.r_zero.insert(out.r_zero.end(), c.zero.begin(), c.zero.end());
    out.non_units += c.non_units;
  }
  return out;
}

PrimeCountReport prime_counts(u64 p, u64 k) {
  if (p == 2 || !is_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
  if (p > kMaxModulus) throw DomainError("prime exceeds 2^62");
  if (k < 1) throw DomainError("exponent k must be >= 1");
  PrimeCountReport r;
  r.p = p;
  r.k = k;
  r.m = p - 1;
  r.g = gcd(k, r.m);
  r.count_plus = r.g;
  r.minus_solvable = (r.m / 2) % r.g == 0;
  r.count_minus = r.minus_solvable ? r.g : 0;
  return r;
}

std::vector<u64> coset(u64 g, const std::vector<u64>& subgroup, u64 n) {
  std::vector<u64> out;
  out.reserve(subgroup.size());
  for (u64 h : subgroup) out.push_back(mul_mod(g, h, n));
  std::sort(out.begin(), out.end());
  return out;
}

IndexTwoReport index_two_check(u64 n, u64 k, const EnumerationOptions& options) {
  return index_two_check(enumerate_partition(n, k, options));
}

IndexTwoReport index_two_check(const ResiduePartition& partition) {
  IndexTwoReport r;
  r.subgroup_size = partition.r_plus.size();
  r.coset_size = partition.r_minus.size();
  r.unit_count = partition.unit_count();
  r.holds = !partition.r_minus.empty();
  if (!r.holds) return r;

  r.witness = partition.r_minus.front();
  if (r.subgroup_size + r.coset_size != 2 * r.subgroup_size ||
      coset(r.witness, partition.r_plus, partition.n) != partition.r_minus)
    throw InvariantError("R-1 is not the coset g*R+1 for n=" + std::to_string(partition.n) +
                         " k=" + std::to_string(partition.k));
  return r;
}

SymbolValue symbol_by_primitive_root(i64 a, u64 p, u64 k) {
  if (k < 1) throw DomainError("exponent k must be >= 1");
  const u64 g = primitive_root(p);
  const u64 r = discrete_log(a, g, p);
  const u64 m = p - 1;
  const auto kr = static_cast<u64>(static_cast<unsigned __int128>(k % m) * r % m);
  SymbolValue v = SymbolValue::Zero;
  if (kr == 0)
    v = SymbolValue::PlusOne;
  else if (kr == m / 2)
    v = SymbolValue::MinusOne;
  if (v != symbol({a, p, k}))
    throw InvariantError("primitive-root classification disagrees with the symbol at a=" +
                         std::to_string(a) + " p=" + std::to_string(p) + " k=" + std::to_string(k));
  return v;
}

}  // namespace expcong
