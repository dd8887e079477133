#include "expcong/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "expcong/error.hpp"

namespace expcong {

namespace {

// Sums term(i) for i in [lo, hi) in `jobs` contiguous blocks, each ascending,
// combined left to right.
template <typename Term>
ComplexSample blocked_sum(u64 lo, u64 hi, unsigned jobs, const Term& term) {
  if (hi <= lo) return {0.0, 0.0};
  const u64 count = hi - lo;
  const u64 blocks = std::clamp<u64>(jobs, 1, count);
  std::vector<ComplexSample> partial(blocks);
  auto run = [&](u64 b) {
    const u64 first = lo + b * (count / blocks);
    const u64 last = b + 1 == blocks ? hi : lo + (b + 1) * (count / blocks);
    ComplexSample acc{0.0, 0.0};
    for (u64 i = first; i < last; ++i) acc += term(i);
    partial[b] = acc;
  };
  if (blocks == 1) {
    run(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(blocks);
    for (u64 b = 0; b < blocks; ++b) workers.emplace_back(run, b);
  }
  ComplexSample total{0.0, 0.0};
  for (const auto& p : partial) total += p;
  return total;
}

void require_convergent(ComplexSample s) {
  if (!(s.real() > 1.0) || !std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw DomainError("Re(s) must exceed 1 for the Dirichlet series to converge");
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

SymbolValue chi(i64 m, u64 n, u64 k) { return symbol({m, n, k}); }

i64 orthogonality_sum(u64 n, u64 k, const EnumerationOptions& options) {
  return orthogonality_sum(enumerate_partition(n, k, options));
}

i64 orthogonality_sum(const ResiduePartition& partition) {
  const auto plus = static_cast<i64>(partition.r_plus.size());
  const auto minus = static_cast<i64>(partition.r_minus.size());
  const i64 sum = plus - minus;
  const i64 expected = minus > 0 ? 0 : plus;
  if (sum != expected)
    throw InvariantError("orthogonality fails for n=" + std::to_string(partition.n) +
                         " k=" + std::to_string(partition.k));
  return sum;
}

ComplexSample exp_sum(i64 m, u64 n, u64 k, const EnumerationOptions& options) {
  return exp_sum(m, enumerate_partition(n, k, options), options.jobs);
}

ComplexSample exp_sum(i64 m, const ResiduePartition& partition, unsigned jobs) {
  const u64 n = partition.n;
  // nonzero weights, ascending in a
  std::vector<std::pair<u64, double>> support;
  support.reserve(partition.r_plus.size() + partition.r_minus.size());
  std::size_t i = 0, j = 0;
  while (i < partition.r_plus.size() || j < partition.r_minus.size()) {
    if (j == partition.r_minus.size() ||
        (i < partition.r_plus.size() && partition.r_plus[i] < partition.r_minus[j]))
      support.emplace_back(partition.r_plus[i++], 1.0);
    else
      support.emplace_back(partition.r_minus[j++], -1.0);
  }
  const u64 step = normalize(m, n);
  const double scale = 2.0 * std::numbers::pi / static_cast<double>(n);
  return blocked_sum(0, support.size(), jobs, [&](u64 idx) -> ComplexSample {
    const auto [a, w] = support[idx];
    const u64 r = mul_mod(a, step, n);
    // signed representative keeps S(-m) = conj(S(m)) exact away from r = n/2
    const double t = 2 * r <= n ? static_cast<double>(r) : -static_cast<double>(n - r);
    const double angle = scale * t;
    return {w * std::cos(angle), w * std::sin(angle)};
  });
}

ExpSumBoundReport exp_sum_bound_check(u64 n, u64 k, i64 m_first, i64 m_last,
                                      const EnumerationOptions& options) {
  if (m_last < m_first) throw DomainError("empty m range");
  const ResiduePartition partition = enumerate_partition(n, k, options);
  ExpSumBoundReport report;
  report.n = n;
  report.k = k;
  report.bound = partition.r_plus.size() + partition.r_minus.size();
  report.phi = partition.unit_count();
  for (i64 m = m_first;; ++m) {
    ExpSumRow row{m, exp_sum(m, partition, options.jobs), 0.0};
    row.magnitude = std::abs(row.value);
    if (row.magnitude > static_cast<double>(report.bound) + kExpSumSlack) report.all_within = false;
    const double ratio = report.bound == 0 ? 0.0 : row.magnitude / static_cast<double>(report.bound);
    if (report.rows.empty() || ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.worst_m = m;
    }
    report.rows.push_back(row);
    if (m == m_last) break;
  }
  return report;
}

double series_tail_bound(double sigma, u64 terms) {
  if (!(sigma > 1.0)) throw DomainError("tail bound needs Re(s) > 1");
  return std::pow(static_cast<double>(terms), 1.0 - sigma) / (sigma - 1.0);
}

ComplexSample power_minus_s(u64 m, ComplexSample s) {
  const double lm = std::log(static_cast<double>(m));
  const double mag = std::exp(-s.real() * lm);
  const double phase = -s.imag() * lm;
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

SeriesSample l_series_partial(ComplexSample s, u64 n, u64 k, u64 terms, unsigned jobs) {
  require_convergent(s);
  if (terms < 1) throw DomainError("truncation M must be >= 1");
  SymbolQuery{0, n, k}.validate();

  // chi depends only on m mod n; tabulate when that is cheaper
  std::vector<signed char> table;
  if (n <= terms && n <= kDefaultEnumerationCap) {
    table.resize(n);
    for (u64 a = 0; a < n; ++a) table[a] = static_cast<signed char>(to_int(classify_power(mod_pow_u(a, k, n), n)));
  }
  auto chi_of = [&](u64 m) -> int {
    if (!table.empty()) return table[m % n];
    return to_int(classify_power(mod_pow_u(m, k, n), n));
  };

  SeriesSample out;
  out.s = s;
  out.terms = terms;
  out.partial_sum = blocked_sum(1, terms + 1, jobs, [&](u64 m) -> ComplexSample {
    const int c = chi_of(m);
    if (c == 0) return {0.0, 0.0};
    return static_cast<double>(c) * power_minus_s(m, s);
  });
  out.tail_bound = series_tail_bound(s.real(), terms);
  return out;
}

ComplexSample euler_product_partial(ComplexSample s, u64 n, u64 k, u64 prime_cutoff) {
  require_convergent(s);
  SymbolQuery{0, n, k}.validate();
  ComplexSample product{1.0, 0.0};
  for (u64 p : primes_up_to(prime_cutoff)) {
    const int c = to_int(classify_power(mod_pow_u(p, k, n), n));
    if (c == 0) continue;
    product /= ComplexSample{1.0, 0.0} - static_cast<double>(c) * power_minus_s(p, s);
  }
  return product;
}

EulerComparison euler_product_comparison(ComplexSample s, u64 n, u64 k, u64 prime_cutoff, u64 terms,
                                         const EnumerationOptions& options) {
  require_convergent(s);
  EulerComparison out;
  out.totally_multiplicative = enumerate_partition(n, k, options).r_zero.empty();
  out.euler = euler_product_partial(s, n, k, prime_cutoff);
  out.series = l_series_partial(s, n, k, terms, options.jobs);
  out.discrepancy = std::abs(out.euler - out.series.partial_sum);
  out.combined_bound = out.series.tail_bound + series_tail_bound(s.real(), std::max<u64>(prime_cutoff, 1));
  out.within_bound = out.discrepancy <= out.combined_bound;
  return out;
}

double gamma_factor(double s) {
  if (!(s > 0.0)) throw DomainError("gamma factor needs s > 0");
  return std::pow(std::numbers::pi, -s / 2.0) * std::tgamma(s / 2.0);
}

}  // namespace expcong
