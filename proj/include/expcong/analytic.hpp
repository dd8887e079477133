#pragma once

// Character-like sums of chi_k(a) = (a/n)_k: orthogonality, weighted
// exponential sums S(m), truncated Dirichlet series and Euler products.
//
// Floating point: double precision, ascending-index summation. With
// jobs > 1 the index range is split into `jobs` contiguous blocks whose
// partial sums are combined left to right, so results are reproducible for a
// fixed job count; jobs = 1 is the reference.

#include <complex>
#include <cstdint>
#include <vector>

#include "expcong/arith.hpp"
#include "expcong/partition.hpp"
#include "expcong/symbol.hpp"

namespace expcong {

using ComplexSample = std::complex<double>;

inline constexpr double kExpSumSlack = 1e-9;

SymbolValue chi(i64 m, u64 n, u64 k);

// Sum of chi over a in [0, n). Zero whenever R-1 is nonempty, |R+1| otherwise
// (throws InvariantError if that fails).
i64 orthogonality_sum(u64 n, u64 k, const EnumerationOptions& options = {});
i64 orthogonality_sum(const ResiduePartition& partition);

// S(m) = sum over R+1 of e(am/n) minus sum over R-1 of e(am/n).
ComplexSample exp_sum(i64 m, u64 n, u64 k, const EnumerationOptions& options = {});
ComplexSample exp_sum(i64 m, const ResiduePartition& partition, unsigned jobs = 1);

struct ExpSumRow {
  i64 m = 0;
  ComplexSample value;
  double magnitude = 0;
};

struct ExpSumBoundReport {
  u64 n = 0;
  u64 k = 0;
  u64 bound = 0;  // |R+1| + |R-1|
  u64 phi = 0;
  std::vector<ExpSumRow> rows;
  double max_ratio = 0;  // max |S(m)| / bound, 0 when bound = 0
  i64 worst_m = 0;
  bool all_within = true;  // |S(m)| <= bound + kExpSumSlack for every row
};

ExpSumBoundReport exp_sum_bound_check(u64 n, u64 k, i64 m_first, i64 m_last,
                                      const EnumerationOptions& options = {});

struct SeriesSample {
  ComplexSample s;
  u64 terms = 0;
  ComplexSample partial_sum;
  double tail_bound = 0;
};

// Integral bound on sum_{m > M} m^{-sigma}: M^{1-sigma} / (sigma - 1).
double series_tail_bound(double sigma, u64 terms);

// m^{-s} for complex s.
ComplexSample power_minus_s(u64 m, ComplexSample s);

// Sum_{m=1}^{M} chi(m) m^{-s}. Re(s) must exceed 1.
SeriesSample l_series_partial(ComplexSample s, u64 n, u64 k, u64 terms, unsigned jobs = 1);

// Prod_{p <= P} (1 - chi(p) p^{-s})^{-1}.
ComplexSample euler_product_partial(ComplexSample s, u64 n, u64 k, u64 prime_cutoff);

struct EulerComparison {
  ComplexSample euler;
  SeriesSample series;
  double discrepancy = 0;      // |euler - series|
  double combined_bound = 0;   // tail(P) + tail(M)
  // R0 is empty, so chi is totally multiplicative and the product must match.
  bool totally_multiplicative = false;
  bool within_bound = false;
};

EulerComparison euler_product_comparison(ComplexSample s, u64 n, u64 k, u64 prime_cutoff, u64 terms,
                                         const EnumerationOptions& options = {});

// pi^{-s/2} Gamma(s/2) for real s > 0. For exploratory completed values only.
double gamma_factor(double s);

}  // namespace expcong
