/*
 * expcong: C interface to the exponential congruence symbol library.
 *
 * All entry points return an expcong_status. Results are written through out
 * pointers; on failure the out values are left untouched and
 * expcong_last_error() holds a human-readable message for the context.
 *
 * A context carries configuration (enumeration cap, worker count) and the
 * last error message. Contexts are not synchronized: use one per thread.
 * Objects returned through handles are immutable and may be shared.
 */
#ifndef EXPCONG_EXPCONG_H
#define EXPCONG_EXPCONG_H

#include <stddef.h>
#include <stdint.h>

#if defined(EXPCONG_BUILDING_LIBRARY)
#define EXPCONG_API __attribute__((visibility("default")))
#else
#define EXPCONG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum expcong_status {
  EXPCONG_OK = 0,
  EXPCONG_ERR_DOMAIN = 1,        /* invalid parameters */
  EXPCONG_ERR_NOT_UNIT = 2,      /* gcd(a, n) > 1 where a unit is required */
  EXPCONG_ERR_RESOURCE = 3,      /* enumeration cap or table limit exceeded */
  EXPCONG_ERR_INVARIANT = 4,     /* internal identity check failed */
  EXPCONG_ERR_NULL_ARGUMENT = 5,
  EXPCONG_ERR_OUT_OF_RANGE = 6,  /* index past the end of a handle's data */
  EXPCONG_ERR_INTERNAL = 7
} expcong_status;

/* Residue classes of a partition; the values equal the symbol value. */
typedef enum expcong_class {
  EXPCONG_CLASS_MINUS = -1,
  EXPCONG_CLASS_ZERO = 0,
  EXPCONG_CLASS_PLUS = 1
} expcong_class;

typedef enum expcong_symbol_path {
  EXPCONG_PATH_DIRECT = 0,
  EXPCONG_PATH_CRT = 1,
  EXPCONG_PATH_ORDER = 2,
  EXPCONG_PATH_PRIMITIVE_ROOT = 3 /* odd prime n only */
} expcong_symbol_path;

typedef struct expcong_context expcong_context;
typedef struct expcong_factorization expcong_factorization;
typedef struct expcong_partition expcong_partition;
typedef struct expcong_expsum_report expcong_expsum_report;
typedef struct expcong_verify_report expcong_verify_report;

typedef struct expcong_congruence {
  uint64_t residue;
  uint64_t modulus;
} expcong_congruence;

typedef struct expcong_order_info {
  uint64_t base;
  uint64_t modulus;
  uint64_t order;
  int divides_k;
  int divides_2k;
} expcong_order_info;

typedef struct expcong_prime_count_report {
  uint64_t p;
  uint64_t k;
  uint64_t m;
  uint64_t g;
  uint64_t count_plus;
  uint64_t count_minus;
  int minus_solvable;
} expcong_prime_count_report;

typedef struct expcong_index_two_report {
  int holds;
  uint64_t witness;
  uint64_t subgroup_size;
  uint64_t coset_size;
  uint64_t unit_count;
} expcong_index_two_report;

typedef struct expcong_legendre_report {
  uint64_t p;
  uint64_t agreements;
  uint64_t total;
  int64_t first_mismatch; /* -1 when all agree */
} expcong_legendre_report;

typedef struct expcong_jacobi_report {
  uint64_t n;
  uint64_t k;
  uint64_t counts[3][3]; /* [symbol + 1][jacobi + 1] */
} expcong_jacobi_report;

typedef struct expcong_expsum_summary {
  uint64_t n;
  uint64_t k;
  uint64_t bound;
  uint64_t phi;
  double max_ratio;
  int64_t worst_m;
  int all_within;
} expcong_expsum_summary;

typedef struct expcong_series_sample {
  double s_re;
  double s_im;
  uint64_t terms;
  double sum_re;
  double sum_im;
  double tail_bound;
} expcong_series_sample;

typedef struct expcong_euler_comparison {
  double euler_re;
  double euler_im;
  expcong_series_sample series;
  double discrepancy;
  double combined_bound;
  int totally_multiplicative;
  int within_bound;
} expcong_euler_comparison;

typedef struct expcong_verify_entry {
  const char* id;
  const char* reference;
  uint64_t checks;
  int passed;
  int expected_failure;
  const char* detail;
} expcong_verify_entry;

/* ---- library and context ---------------------------------------------- */

EXPCONG_API const char* expcong_version(void);
EXPCONG_API const char* expcong_status_string(expcong_status status);

EXPCONG_API expcong_status expcong_context_create(expcong_context** out);
EXPCONG_API void expcong_context_destroy(expcong_context* ctx);
EXPCONG_API expcong_status expcong_context_set_max_n(expcong_context* ctx, uint64_t max_n);
EXPCONG_API expcong_status expcong_context_set_jobs(expcong_context* ctx, unsigned jobs);
EXPCONG_API uint64_t expcong_context_max_n(const expcong_context* ctx);
EXPCONG_API unsigned expcong_context_jobs(const expcong_context* ctx);
EXPCONG_API const char* expcong_last_error(const expcong_context* ctx);

/* ---- modular arithmetic ------------------------------------------------ */

EXPCONG_API expcong_status expcong_mod_pow(expcong_context* ctx, int64_t a, uint64_t e, uint64_t n,
                                           uint64_t* out);
EXPCONG_API expcong_status expcong_is_prime(expcong_context* ctx, uint64_t n, int* out);
EXPCONG_API expcong_status expcong_factorize(expcong_context* ctx, uint64_t n, expcong_factorization** out);
EXPCONG_API size_t expcong_factorization_count(const expcong_factorization* f);
EXPCONG_API expcong_status expcong_factorization_get(const expcong_factorization* f, size_t index,
                                                     uint64_t* prime, unsigned* exponent);
EXPCONG_API void expcong_factorization_destroy(expcong_factorization* f);
EXPCONG_API expcong_status expcong_euler_phi(expcong_context* ctx, uint64_t n, uint64_t* out);
EXPCONG_API expcong_status expcong_carmichael_lambda(expcong_context* ctx, uint64_t n, uint64_t* out);
EXPCONG_API expcong_status expcong_multiplicative_order(expcong_context* ctx, int64_t a, uint64_t n, uint64_t k,
                                                        expcong_order_info* out);
EXPCONG_API expcong_status expcong_primitive_root(expcong_context* ctx, uint64_t p, uint64_t* out);
EXPCONG_API expcong_status expcong_discrete_log(expcong_context* ctx, int64_t a, uint64_t g, uint64_t p,
                                                uint64_t* out);
EXPCONG_API expcong_status expcong_crt_combine(expcong_context* ctx, const expcong_congruence* system,
                                               size_t count, expcong_congruence* out);

/* ---- the symbol -------------------------------------------------------- */

/* residue (optional, may be NULL) receives a^k mod n. */
EXPCONG_API expcong_status expcong_symbol(expcong_context* ctx, int64_t a, uint64_t n, uint64_t k, int* value,
                                          uint64_t* residue);
EXPCONG_API expcong_status expcong_symbol_by_path(expcong_context* ctx, expcong_symbol_path path, int64_t a,
                                                  uint64_t n, uint64_t k, int* value);
EXPCONG_API expcong_status expcong_negate_argument(expcong_context* ctx, int64_t a, uint64_t n, uint64_t k,
                                                   int* value);
EXPCONG_API expcong_status expcong_invert_argument(expcong_context* ctx, int64_t a, uint64_t n, uint64_t k,
                                                   int* value);
EXPCONG_API expcong_status expcong_power_compat(expcong_context* ctx, int64_t a, uint64_t t, uint64_t n,
                                                uint64_t k, int* value);
EXPCONG_API expcong_status expcong_is_in_sign_subgroup(expcong_context* ctx, int64_t a, uint64_t n, uint64_t k,
                                                       int* out);

/* ---- partitions and counts -------------------------------------------- */

EXPCONG_API expcong_status expcong_partition_create(expcong_context* ctx, uint64_t n, uint64_t k,
                                                    expcong_partition** out);
EXPCONG_API uint64_t expcong_partition_n(const expcong_partition* p);
EXPCONG_API uint64_t expcong_partition_k(const expcong_partition* p);
EXPCONG_API size_t expcong_partition_size(const expcong_partition* p, expcong_class which);
/* Sorted ascending; valid for the lifetime of the handle. */
EXPCONG_API const uint64_t* expcong_partition_data(const expcong_partition* p, expcong_class which);
EXPCONG_API uint64_t expcong_partition_non_units(const expcong_partition* p);
EXPCONG_API void expcong_partition_destroy(expcong_partition* p);

EXPCONG_API expcong_status expcong_prime_counts(expcong_context* ctx, uint64_t p, uint64_t k,
                                                expcong_prime_count_report* out);
EXPCONG_API expcong_status expcong_index_two_check(expcong_context* ctx, uint64_t n, uint64_t k,
                                                   expcong_index_two_report* out);

/* ---- classical symbols ------------------------------------------------- */

EXPCONG_API expcong_status expcong_legendre(expcong_context* ctx, int64_t a, uint64_t p, int* value);
EXPCONG_API expcong_status expcong_jacobi(expcong_context* ctx, int64_t a, uint64_t n, int* value);
EXPCONG_API expcong_status expcong_power_residue_test(expcong_context* ctx, int64_t a, uint64_t p, uint64_t m,
                                                      int* out);
EXPCONG_API expcong_status expcong_legendre_coincidence(expcong_context* ctx, uint64_t p,
                                                        expcong_legendre_report* out);
EXPCONG_API expcong_status expcong_jacobi_compatibility(expcong_context* ctx, uint64_t n,
                                                        expcong_jacobi_report* out);

/* ---- sums and series --------------------------------------------------- */

EXPCONG_API expcong_status expcong_orthogonality_sum(expcong_context* ctx, uint64_t n, uint64_t k, int64_t* out);
EXPCONG_API expcong_status expcong_exp_sum(expcong_context* ctx, int64_t m, uint64_t n, uint64_t k, double* re,
                                           double* im);
EXPCONG_API expcong_status expcong_exp_sum_bound_check(expcong_context* ctx, uint64_t n, uint64_t k,
                                                       int64_t m_first, int64_t m_last,
                                                       expcong_expsum_report** out);
EXPCONG_API void expcong_expsum_report_summary(const expcong_expsum_report* r, expcong_expsum_summary* out);
EXPCONG_API size_t expcong_expsum_report_rows(const expcong_expsum_report* r);
EXPCONG_API expcong_status expcong_expsum_report_row(const expcong_expsum_report* r, size_t index, int64_t* m,
                                                     double* re, double* im, double* magnitude);
EXPCONG_API void expcong_expsum_report_destroy(expcong_expsum_report* r);

EXPCONG_API expcong_status expcong_l_series_partial(expcong_context* ctx, double s_re, double s_im, uint64_t n,
                                                    uint64_t k, uint64_t terms, expcong_series_sample* out);
EXPCONG_API expcong_status expcong_euler_product_partial(expcong_context* ctx, double s_re, double s_im,
                                                         uint64_t n, uint64_t k, uint64_t prime_cutoff,
                                                         double* re, double* im);
EXPCONG_API expcong_status expcong_euler_product_comparison(expcong_context* ctx, double s_re, double s_im,
                                                            uint64_t n, uint64_t k, uint64_t prime_cutoff,
                                                            uint64_t terms, expcong_euler_comparison* out);
/* pi^{-s/2} Gamma(s/2) for real s > 0 */
EXPCONG_API expcong_status expcong_gamma_factor(expcong_context* ctx, double s, double* out);

/* ---- verification suites ----------------------------------------------- */

EXPCONG_API size_t expcong_theorem_count(void);
EXPCONG_API expcong_status expcong_theorem_info(size_t index, const char** id, const char** reference,
                                                int* expected_failure);
/* ids == NULL (or count == 0) runs every suite. quick != 0 selects the reduced scale. */
EXPCONG_API expcong_status expcong_verify_run(expcong_context* ctx, const char* const* ids, size_t count,
                                              int quick, expcong_verify_report** out);
EXPCONG_API size_t expcong_verify_report_count(const expcong_verify_report* r);
EXPCONG_API expcong_status expcong_verify_report_entry(const expcong_verify_report* r, size_t index,
                                                       expcong_verify_entry* out);
EXPCONG_API int expcong_verify_report_all_passed(const expcong_verify_report* r);
EXPCONG_API void expcong_verify_report_destroy(expcong_verify_report* r);

#ifdef __cplusplus
}
#endif

#endif /* EXPCONG_EXPCONG_H */
