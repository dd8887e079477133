#pragma once

// Exhaustive property suites for every law implemented by the library. Each
// suite reports a pass/fail line; the "expected failure" suites pass when the
// documented counterexample is reproduced.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "expcong/arith.hpp"
#include "expcong/partition.hpp"

namespace expcong {

struct VerifyScale {
  u64 symbol_max_n = 2000;  // path equivalence and algebraic laws
  u64 symbol_max_k = 24;
  u64 arith_max_n = 10000;
  u64 prime_count_max_p = 500;
  u64 prime_count_max_k = 60;
  u64 legendre_max_p = 1000;
  u64 power_residue_max_p = 300;
  u64 primitive_root_max_p = 200;
  u64 primitive_root_max_k = 40;
  u64 expsum_max_n = 500;
  u64 expsum_max_k = 12;

  static VerifyScale full() { return {}; }
  static VerifyScale quick();
};

struct TheoremResult {
  std::string id;
  std::string reference;
  u64 checks = 0;
  bool passed = false;
  bool expected_failure = false;
  std::string detail;  // counterexample or summary
};

struct VerifyReport {
  std::vector<TheoremResult> results;

  bool all_passed() const;
  const TheoremResult* first_failure() const;
};

struct TheoremInfo {
  std::string_view id;
  std::string_view reference;
  bool expected_failure;
};

const std::vector<TheoremInfo>& theorem_catalog();

// Runs the named suites (all of them when `ids` is empty). Unknown ids throw
// DomainError. Runs sequentially regardless of options.jobs.
VerifyReport run_verification(const std::vector<std::string>& ids, const VerifyScale& scale,
                              const EnumerationOptions& options = {});

}  // namespace expcong
