#include "expcong/expcong.h"

#include <memory>
#include <new>
#include <string>
#include <vector>

#include "expcong/analytic.hpp"
#include "expcong/arith.hpp"
#include "expcong/classical.hpp"
#include "expcong/error.hpp"
#include "expcong/partition.hpp"
#include "expcong/symbol.hpp"
#include "expcong/verify.hpp"

struct expcong_context {
  expcong::EnumerationOptions options;
  std::string last_error;
};

struct expcong_factorization {
  expcong::FactoredInteger value;
};

struct expcong_partition {
  expcong::ResiduePartition value;
};

struct expcong_expsum_report {
  expcong::ExpSumBoundReport value;
};

struct expcong_verify_report {
  expcong::VerifyReport value;
};

namespace {

using namespace expcong;

struct NullOutput {};

// Runs body, mapping exceptions to status codes and recording the message.
template <typename Body>
expcong_status guarded(expcong_context* ctx, Body&& body) {
  if (ctx == nullptr) return EXPCONG_ERR_NULL_ARGUMENT;
  auto fail = [&](expcong_status status, const char* what) {
    ctx->last_error = what;
    return status;
  };
  try {
    body();
    ctx->last_error.clear();
    return EXPCONG_OK;
  } catch (const NullOutput&) {
    return fail(EXPCONG_ERR_NULL_ARGUMENT, "null output pointer");
  } catch (const NotUnitError& e) {
    return fail(EXPCONG_ERR_NOT_UNIT, e.what());
  } catch (const DomainError& e) {
    return fail(EXPCONG_ERR_DOMAIN, e.what());
  } catch (const ResourceError& e) {
    return fail(EXPCONG_ERR_RESOURCE, e.what());
  } catch (const InvariantError& e) {
    return fail(EXPCONG_ERR_INVARIANT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(EXPCONG_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(EXPCONG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(EXPCONG_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p) {
  if (p == nullptr) throw NullOutput{};
}

const std::vector<u64>& partition_class(const ResiduePartition& p, expcong_class which) {
  switch (which) {
    case EXPCONG_CLASS_PLUS: return p.r_plus;
    case EXPCONG_CLASS_MINUS: return p.r_minus;
    default: return p.r_zero;
  }
}

expcong_series_sample to_c(const SeriesSample& s) {
  return {s.s.real(), s.s.imag(), s.terms, s.partial_sum.real(), s.partial_sum.imag(), s.tail_bound};
}

}  // namespace

extern "C" {

EXPCONG_API const char* expcong_version(void) { return "0.1.0"; }

EXPCONG_API const char* expcong_status_string(expcong_status status) {
  switch (status) {
    case EXPCONG_OK: return "ok";
    case EXPCONG_ERR_DOMAIN: return "domain error";
    case EXPCONG_ERR_NOT_UNIT: return "not a unit";
    case EXPCONG_ERR_RESOURCE: return "resource limit exceeded";
    case EXPCONG_ERR_INVARIANT: return "invariant violated";
    case EXPCONG_ERR_NULL_ARGUMENT: return "null argument";
    case EXPCONG_ERR_OUT_OF_RANGE: return "index out of range";
    case EXPCONG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

EXPCONG_API expcong_status expcong_context_create(expcong_context** out) {
  if (out == nullptr) return EXPCONG_ERR_NULL_ARGUMENT;
  *out = new (std::nothrow) expcong_context{};
  return *out ? EXPCONG_OK : EXPCONG_ERR_RESOURCE;
}

EXPCONG_API void expcong_context_destroy(expcong_context* ctx) { delete ctx; }

EXPCONG_API expcong_status expcong_context_set_max_n(expcong_context* ctx, uint64_t max_n) {
  return guarded(ctx, [&] {
    if (max_n < 2) throw DomainError("enumeration cap must be >= 2");
    ctx->options.max_n = max_n;
  });
}

EXPCONG_API expcong_status expcong_context_set_jobs(expcong_context* ctx, unsigned jobs) {
  return guarded(ctx, [&] {
    if (jobs < 1) throw DomainError("jobs must be >= 1");
    ctx->options.jobs = jobs;
  });
}

EXPCONG_API uint64_t expcong_context_max_n(const expcong_context* ctx) { return ctx ? ctx->options.max_n : 0; }
EXPCONG_API unsigned expcong_context_jobs(const expcong_context* ctx) { return ctx ? ctx->options.jobs : 0; }

EXPCONG_API const char* expcong_last_error(const expcong_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

// ---- arith

EXPCONG_API expcong_status expcong_mod_pow(expcong_context* ctx, int64_t a, uint64_t e, uint64_t n, uint64_t* out) {
  return guarded(ctx, [&] {
    require(out);
    *out = mod_pow(a, e, n);
  });
}

EXPCONG_API expcong_status expcong_is_prime(expcong_context* ctx, uint64_t n, int* out) {
  return guarded(ctx, [&] {
    require(out);
    *out = is_prime(n) ? 1 : 0;
  });
}

EXPCONG_API expcong_status expcong_factorize(expcong_context* ctx, uint64_t n, expcong_factorization** out) {
  return guarded(ctx, [&] {
    require(out);
    *out = new expcong_factorization{factorize(n)};
  });
}

EXPCONG_API size_t expcong_factorization_count(const expcong_factorization* f) {
  return f ? f->value.factors().size() : 0;
}

EXPCONG_API expcong_status expcong_factorization_get(const expcong_factorization* f, size_t index, uint64_t* prime,
                                                     unsigned* exponent) {
  if (f == nullptr || prime == nullptr || exponent == nullptr) return EXPCONG_ERR_NULL_ARGUMENT;
  if (index >= f->value.factors().size()) return EXPCONG_ERR_OUT_OF_RANGE;
  *prime = f->value.factors()[index].prime;
  *exponent = f->value.factors()[index].exponent;
  return EXPCONG_OK;
}

EXPCONG_API void expcong_factorization_destroy(expcong_factorization* f) { delete f; }

EXPCONG_API expcong_status expcong_euler_phi(expcong_context* ctx, uint64_t n, uint64_t* out) {
  return guarded(ctx, [&] {
    require(out);
    *out = euler_phi(factorize(n));
  });
}

EXPCONG_API expcong_status expcong_carmichael_lambda(expcong_context* ctx, uint64_t n, uint64_t* out) {
  return guarded(ctx, [&] {
    require(out);
    *out = carmichael_lambda(factorize(n));
  });
}

EXPCONG_API expcong_status expcong_multiplicative_order(expcong_context* ctx, int64_t a, uint64_t n, uint64_t k,
                                                        expcong_order_info* out) {
  return guarded(ctx, [&] {
    require(out);
    const OrderInfo info = multiplicative_order(a, factorize(n), k);
    *out = {info.base, info.modulus, info.order, info.divides_k, info.divides_2k};
  });
}

EXPCONG_API expcong_status expcong_primitive_root(expcong_context* ctx, uint64_t p, uint64_t* out) {
  return guarded(ctx, [&] {
    require(out);
    *out = primitive_root(p);
  });
}

EXPCONG_API expcong_status expcong_discrete_log(expcong_context* ctx, int64_t a, uint64_t g, uint64_t p,
                                                uint64_t* out) {
  return guarded(ctx, [&] {
    require(out);
    *out = discrete_log(a, g, p);
  });
}

EXPCONG_API expcong_status expcong_crt_combine(expcong_context* ctx, const expcong_congruence* system, size_t count,
                                               expcong_congruence* out) {
  return guarded(ctx, [&] {
    require(out);
    if (count > 0) require(system);
    std::vector<Congruence> sys;
    sys.reserve(count);
    for (size_t i = 0; i < count; ++i) sys.push_back({system[i].residue, system[i].modulus});
    const Congruence x = crt_combine(sys);
    *out = {x.residue, x.modulus};
  });
}

// ---- symbol

EXPCONG_API expcong_status expcong_symbol(expcong_context* ctx, int64_t a, uint64_t n, uint64_t k, int* value,
                                          uint64_t* residue) {
  return guarded(ctx, [&] {
    require(value);
    const SymbolQuery q{a, n, k};
    const SymbolValue v = symbol(q);
    if (residue) *residue = mod_pow(a, k, n);
    *value = to_int(v);
  });
}

EXPCONG_API expcong_status expcong_symbol_by_path(expcong_context* ctx, expcong_symbol_path path, int64_t a,
                                                  uint64_t n, uint64_t k, int* value) {
  return guarded(ctx, [&] {
    require(value);
    const SymbolQuery q{a, n, k};
    q.validate();
    SymbolValue v;
    switch (path) {
      case EXPCONG_PATH_DIRECT: v = symbol(q); break;
      case EXPCONG_PATH_CRT: v = symbol_via_crt(q, factorize(n)); break;
      case EXPCONG_PATH_ORDER: v = symbol_via_order(q); break;
      case EXPCONG_PATH_PRIMITIVE_ROOT:
        v = normalize(a, n) == 0 && is_prime(n) ? SymbolValue::Zero : symbol_by_primitive_root(a, n, k);
        break;
      default: throw DomainError("unknown evaluation path");
    }
    *value = to_int(v);
  });
}

EXPCONG_API expcong_status expcong_negate_argument(expcong_context* ctx, int64_t a, uint64_t n, uint64_t k,
                                                   int* value) {
  return guarded(ctx, [&] {
    require(value);
    *value = to_int(negate_argument({a, n, k}));
  });
}

EXPCONG_API expcong_status expcong_invert_argument(expcong_context* ctx, int64_t a, uint64_t n, uint64_t k,
                                                   int* value) {
  return guarded(ctx, [&] {
    require(value);
    *value = to_int(invert_argument({a, n, k}));
  });
}

EXPCONG_API expcong_status expcong_power_compat(expcong_context* ctx, int64_t a, uint64_t t, uint64_t n, uint64_t k,
                                                int* value) {
  return guarded(ctx, [&] {
    require(value);
    *value = to_int(power_compat(a, t, n, k));
  });
}

EXPCONG_API expcong_status expcong_is_in_sign_subgroup(expcong_context* ctx, int64_t a, uint64_t n, uint64_t k,
                                                       int* out) {
  return guarded(ctx, [&] {
    require(out);
    *out = is_in_sign_subgroup(a, n, k) ? 1 : 0;
  });
}

// ---- partition

EXPCONG_API expcong_status expcong_partition_create(expcong_context* ctx, uint64_t n, uint64_t k,
                                                    expcong_partition** out) {
  return guarded(ctx, [&] {
    require(out);
    *out = new expcong_partition{enumerate_partition(n, k, ctx->options)};
  });
}

EXPCONG_API uint64_t expcong_partition_n(const expcong_partition* p) { return p ? p->value.n : 0; }
EXPCONG_API uint64_t expcong_partition_k(const expcong_partition* p) { return p ? p->value.k : 0; }

EXPCONG_API size_t expcong_partition_size(const expcong_partition* p, expcong_class which) {
  return p ? partition_class(p->value, which).size() : 0;
}

EXPCONG_API const uint64_t* expcong_partition_data(const expcong_partition* p, expcong_class which) {
  return p ? partition_class(p->value, which).data() : nullptr;
}

EXPCONG_API uint64_t expcong_partition_non_units(const expcong_partition* p) { return p ? p->value.non_units : 0; }

EXPCONG_API void expcong_partition_destroy(expcong_partition* p) { delete p; }

EXPCONG_API expcong_status expcong_prime_counts(expcong_context* ctx, uint64_t p, uint64_t k,
                                                expcong_prime_count_report* out) {
  return guarded(ctx, [&] {
    require(out);
    const PrimeCountReport r = prime_counts(p, k);
    *out = {r.p, r.k, r.m, r.g, r.count_plus, r.count_minus, r.minus_solvable};
  });
}

EXPCONG_API expcong_status expcong_index_two_check(expcong_context* ctx, uint64_t n, uint64_t k,
                                                   expcong_index_two_report* out) {
  return guarded(ctx, [&] {
    require(out);
    const IndexTwoReport r = index_two_check(n, k, ctx->options);
    *out = {r.holds, r.witness, r.subgroup_size, r.coset_size, r.unit_count};
  });
}

// ---- classical

EXPCONG_API expcong_status expcong_legendre(expcong_context* ctx, int64_t a, uint64_t p, int* value) {
  return guarded(ctx, [&] {
    require(value);
    *value = to_int(legendre(a, p));
  });
}

EXPCONG_API expcong_status expcong_jacobi(expcong_context* ctx, int64_t a, uint64_t n, int* value) {
  return guarded(ctx, [&] {
    require(value);
    *value = to_int(jacobi(a, n));
  });
}

EXPCONG_API expcong_status expcong_power_residue_test(expcong_context* ctx, int64_t a, uint64_t p, uint64_t m,
                                                      int* out) {
  return guarded(ctx, [&] {
    require(out);
    *out = power_residue_test(a, p, m) ? 1 : 0;
  });
}

EXPCONG_API expcong_status expcong_legendre_coincidence(expcong_context* ctx, uint64_t p,
                                                        expcong_legendre_report* out) {
  return guarded(ctx, [&] {
    require(out);
    const LegendreCoincidence r = legendre_coincidence(p, ctx->options);
    *out = {r.p, r.agreements, r.total, r.first_mismatch};
  });
}

EXPCONG_API expcong_status expcong_jacobi_compatibility(expcong_context* ctx, uint64_t n,
                                                        expcong_jacobi_report* out) {
  return guarded(ctx, [&] {
    require(out);
    const JacobiCompatibility r = jacobi_compatibility(n, ctx->options);
    out->n = r.n;
    out->k = r.k;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out->counts[i][j] = r.counts[i][j];
  });
}

// ---- analytic

EXPCONG_API expcong_status expcong_orthogonality_sum(expcong_context* ctx, uint64_t n, uint64_t k, int64_t* out) {
  return guarded(ctx, [&] {
    require(out);
    *out = orthogonality_sum(n, k, ctx->options);
  });
}

EXPCONG_API expcong_status expcong_exp_sum(expcong_context* ctx, int64_t m, uint64_t n, uint64_t k, double* re,
                                           double* im) {
  return guarded(ctx, [&] {
    require(re);
    require(im);
    const ComplexSample v = exp_sum(m, n, k, ctx->options);
    *re = v.real();
    *im = v.imag();
  });
}

EXPCONG_API expcong_status expcong_exp_sum_bound_check(expcong_context* ctx, uint64_t n, uint64_t k,
                                                       int64_t m_first, int64_t m_last,
                                                       expcong_expsum_report** out) {
  return guarded(ctx, [&] {
    require(out);
    *out = new expcong_expsum_report{exp_sum_bound_check(n, k, m_first, m_last, ctx->options)};
  });
}

EXPCONG_API void expcong_expsum_report_summary(const expcong_expsum_report* r, expcong_expsum_summary* out) {
  if (r == nullptr || out == nullptr) return;
  const auto& v = r->value;
  *out = {v.n, v.k, v.bound, v.phi, v.max_ratio, v.worst_m, v.all_within};
}

EXPCONG_API size_t expcong_expsum_report_rows(const expcong_expsum_report* r) { return r ? r->value.rows.size() : 0; }

EXPCONG_API expcong_status expcong_expsum_report_row(const expcong_expsum_report* r, size_t index, int64_t* m,
                                                     double* re, double* im, double* magnitude) {
  if (r == nullptr || m == nullptr || re == nullptr || im == nullptr || magnitude == nullptr)
    return EXPCONG_ERR_NULL_ARGUMENT;
  if (index >= r->value.rows.size()) return EXPCONG_ERR_OUT_OF_RANGE;
  const ExpSumRow& row = r->value.rows[index];
  *m = row.m;
  *re = row.value.real();
  *im = row.value.imag();
  *magnitude = row.magnitude;
  return EXPCONG_OK;
}

EXPCONG_API void expcong_expsum_report_destroy(expcong_expsum_report* r) { delete r; }

EXPCONG_API expcong_status expcong_l_series_partial(expcong_context* ctx, double s_re, double s_im, uint64_t n,
                                                    uint64_t k, uint64_t terms, expcong_series_sample* out) {
  return guarded(ctx, [&] {
    require(out);
    *out = to_c(l_series_partial({s_re, s_im}, n, k, terms, ctx->options.jobs));
  });
}

EXPCONG_API expcong_status expcong_euler_product_partial(expcong_context* ctx, double s_re, double s_im, uint64_t n,
                                                         uint64_t k, uint64_t prime_cutoff, double* re, double* im) {
  return guarded(ctx, [&] {
    require(re);
    require(im);
    const ComplexSample v = euler_product_partial({s_re, s_im}, n, k, prime_cutoff);
    *re = v.real();
    *im = v.imag();
  });
}

EXPCONG_API expcong_status expcong_euler_product_comparison(expcong_context* ctx, double s_re, double s_im,
                                                            uint64_t n, uint64_t k, uint64_t prime_cutoff,
                                                            uint64_t terms, expcong_euler_comparison* out) {
  return guarded(ctx, [&] {
    require(out);
    const EulerComparison c = euler_product_comparison({s_re, s_im}, n, k, prime_cutoff, terms, ctx->options);
    *out = {c.euler.real(), c.euler.imag(), to_c(c.series), c.discrepancy,
            c.combined_bound, c.totally_multiplicative, c.within_bound};
  });
}

EXPCONG_API expcong_status expcong_gamma_factor(expcong_context* ctx, double s, double* out) {
  return guarded(ctx, [&] {
    require(out);
    *out = gamma_factor(s);
  });
}

// ---- verification

EXPCONG_API size_t expcong_theorem_count(void) { return theorem_catalog().size(); }

EXPCONG_API expcong_status expcong_theorem_info(size_t index, const char** id, const char** reference,
                                                int* expected_failure) {
  const auto& catalog = theorem_catalog();
  if (index >= catalog.size()) return EXPCONG_ERR_OUT_OF_RANGE;
  // catalog strings are literals, so data() is NUL-terminated
  if (id) *id = catalog[index].id.data();
  if (reference) *reference = catalog[index].reference.data();
  if (expected_failure) *expected_failure = catalog[index].expected_failure;
  return EXPCONG_OK;
}

EXPCONG_API expcong_status expcong_verify_run(expcong_context* ctx, const char* const* ids, size_t count, int quick,
                                              expcong_verify_report** out) {
  return guarded(ctx, [&] {
    require(out);
    std::vector<std::string> selected;
    if (ids != nullptr)
      for (size_t i = 0; i < count; ++i) {
        if (ids[i] == nullptr) throw DomainError("null theorem id");
        selected.emplace_back(ids[i]);
      }
    const VerifyScale scale = quick ? VerifyScale::quick() : VerifyScale::full();
    *out = new expcong_verify_report{run_verification(selected, scale, ctx->options)};
  });
}

EXPCONG_API size_t expcong_verify_report_count(const expcong_verify_report* r) {
  return r ? r->value.results.size() : 0;
}

EXPCONG_API expcong_status expcong_verify_report_entry(const expcong_verify_report* r, size_t index,
                                                       expcong_verify_entry* out) {
  if (r == nullptr || out == nullptr) return EXPCONG_ERR_NULL_ARGUMENT;
  if (index >= r->value.results.size()) return EXPCONG_ERR_OUT_OF_RANGE;
  const TheoremResult& t = r->value.results[index];
  *out = {t.id.c_str(), t.reference.c_str(), t.checks, t.passed, t.expected_failure, t.detail.c_str()};
  return EXPCONG_OK;
}

EXPCONG_API int expcong_verify_report_all_passed(const expcong_verify_report* r) {
  return r && r->value.all_passed() ? 1 : 0;
}

EXPCONG_API void expcong_verify_report_destroy(expcong_verify_report* r) { delete r; }

}  // extern "C"
