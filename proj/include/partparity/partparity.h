/*
 * partparity: partitions of n counted by the parity of their smallest part.
 *
 * C interface to the partparity library. All objects are opaque handles that
 * the caller releases with the matching *_free function. Every fallible call
 * returns a pp_status; on failure pp_last_error() describes the problem for
 * the calling thread. Arbitrary-precision results are returned as decimal
 * strings allocated by the library and released with pp_string_free().
 */
#ifndef PARTPARITY_PARTPARITY_H
#define PARTPARITY_PARTPARITY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PARTPARITY_BUILDING)
#    define PARTPARITY_API __declspec(dllexport)
#  else
#    define PARTPARITY_API __declspec(dllimport)
#  endif
#else
#  define PARTPARITY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
  PP_OK = 0,
  PP_ERR_DOMAIN = 1,           /* precondition violated (bad n, m, p, ...) */
  PP_ERR_INVALID_ARGUMENT = 2, /* null pointer or malformed input */
  PP_ERR_INTERNAL = 3,         /* a mathematical invariant failed */
  PP_ERR_ALLOC = 4
} pp_status;

PARTPARITY_API const char* pp_version(void);
PARTPARITY_API const char* pp_status_string(pp_status status);
/* Message for the last failure on this thread; "" if none. */
PARTPARITY_API const char* pp_last_error(void);
PARTPARITY_API void pp_string_free(char* s);

/* ---- exact partition counts ------------------------------------------- */

typedef struct pp_count_table pp_count_table;

PARTPARITY_API pp_status pp_count_table_new(uint32_t n_max, pp_count_table** out);
PARTPARITY_API void pp_count_table_free(pp_count_table* table);
PARTPARITY_API uint32_t pp_count_table_n_max(const pp_count_table* table);
/* p(n) as a decimal string; n < 0 gives "0", n > n_max is PP_ERR_DOMAIN. */
PARTPARITY_API pp_status pp_count_table_get(const pp_count_table* table, int64_t n,
                                            char** out);

/* ---- enumeration ------------------------------------------------------- */

typedef enum pp_partition_kind {
  PP_ALL_PARTITIONS = 0,      /* partitions of n, reverse lexicographic */
  PP_DISTINCT_PARTITIONS = 1, /* distinct parts, weight n, reverse lexicographic */
  PP_C_PARTITIONS = 2         /* nonempty C-partitions of weight <= n */
} pp_partition_kind;

/* Return nonzero to stop the enumeration early. */
typedef int (*pp_partition_visitor)(const uint32_t* parts, size_t count, void* user);

PARTPARITY_API pp_status pp_for_each_partition(pp_partition_kind kind, uint32_t n,
                                               pp_partition_visitor visit, void* user);

/* ---- T(m) and S(i) ----------------------------------------------------- */

typedef struct pp_prime_power {
  int64_t p; /* signed prime: p = 1 mod 6 */
  uint32_t e;
} pp_prime_power;

typedef struct pp_pell_witness {
  int64_t p;
  uint64_t y0;
  uint64_t x0;
  uint32_t residue12; /* (x0 + 3 y0) mod 12 */
  int32_t sign;       /* sign of T(p) */
} pp_pell_witness;

typedef struct pp_pell_probe {
  uint64_t y;
  int64_t value; /* 6 y^2 + p */
  int32_t is_square;
  uint64_t root; /* floor(sqrt(value)) when value >= 0 */
} pp_pell_probe;

typedef void (*pp_pell_visitor)(const pp_pell_probe* probe, void* user);

typedef struct pp_stable_row {
  uint64_t i;
  uint64_t m;         /* 24 i + 1 */
  int32_t has_witness; /* a factor p = 1 mod 24 with odd exponent fixes the sign */
  pp_pell_witness witness;
  int64_t s;
} pp_stable_row;

/* Writes up to `capacity` factors, ascending by |p|; *count receives the
 * total number, so a short buffer can be detected and retried. */
PARTPARITY_API pp_status pp_signed_factorize(uint64_t m, pp_prime_power* factors,
                                             size_t capacity, size_t* count);
PARTPARITY_API pp_status pp_pell_witness_of(int64_t p, pp_pell_witness* out);
/* Runs the search, reporting every probe to `visit` (may be NULL). */
PARTPARITY_API pp_status pp_pell_search(int64_t p, pp_pell_visitor visit, void* user,
                                        pp_pell_witness* out);
/* Human-readable description of the prime-power rule branch for p^e. */
PARTPARITY_API pp_status pp_t_prime_power(int64_t p, uint32_t e, int64_t* value,
                                          const char** rule);
PARTPARITY_API pp_status pp_t_of(uint64_t m, int64_t* out);
PARTPARITY_API pp_status pp_s_of(uint64_t i, int64_t* out);
PARTPARITY_API pp_status pp_s_oracle(uint32_t i, int64_t* out);
PARTPARITY_API pp_status pp_stable_row_of(uint64_t i, pp_stable_row* out);

/* ---- smallest-part parity ---------------------------------------------- */

typedef struct pp_parity_report pp_parity_report;

typedef enum pp_report_field {
  PP_FIELD_P_N = 0,
  PP_FIELD_DIFF = 1,
  PP_FIELD_P_ODD = 2,
  PP_FIELD_P_EVEN = 3
} pp_report_field;

PARTPARITY_API pp_status pp_parity_counts(const pp_count_table* table, uint32_t n,
                                          pp_parity_report** out);
PARTPARITY_API pp_status pp_parity_counts_oracle(uint32_t n, pp_parity_report** out);
PARTPARITY_API void pp_parity_report_free(pp_parity_report* report);
PARTPARITY_API uint32_t pp_parity_report_n(const pp_parity_report* report);
PARTPARITY_API pp_status pp_parity_report_field(const pp_parity_report* report,
                                                pp_report_field field, char** out);

/* Each writes a decimal string. */
PARTPARITY_API pp_status pp_parity_difference(const pp_count_table* table, uint32_t n,
                                              char** out);
PARTPARITY_API pp_status pp_t_sum_enum(uint32_t n, char** out);
PARTPARITY_API pp_status pp_t_sum_formula(const pp_count_table* table, uint32_t n,
                                          char** out);
PARTPARITY_API pp_status pp_count_smallest_part_pie(const pp_count_table* table,
                                                    uint32_t n, uint32_t i, char** out);
PARTPARITY_API pp_status pp_c_signed_convolution(const pp_count_table* table,
                                                 uint32_t n, char** out);
PARTPARITY_API pp_status pp_distinct_signed_convolution(const pp_count_table* table,
                                                        uint32_t n, char** out);

/* ---- verification ------------------------------------------------------ */

typedef struct pp_verify_options {
  uint32_t max_n;
  uint32_t max_i;
  const char* inject_fault; /* suite name or NULL */
} pp_verify_options;

typedef struct pp_verify_result pp_verify_result;

PARTPARITY_API pp_status pp_verify_run(const pp_verify_options* options,
                                       pp_verify_result** out);
PARTPARITY_API void pp_verify_result_free(pp_verify_result* result);
PARTPARITY_API size_t pp_verify_suite_count(const pp_verify_result* result);
PARTPARITY_API const char* pp_verify_suite_name(const pp_verify_result* result, size_t k);
PARTPARITY_API int pp_verify_suite_passed(const pp_verify_result* result, size_t k);
PARTPARITY_API uint64_t pp_verify_suite_checks(const pp_verify_result* result, size_t k);
/* First counterexample of a failed suite; "" when it passed. */
PARTPARITY_API const char* pp_verify_suite_detail(const pp_verify_result* result,
                                                  size_t k);
PARTPARITY_API int pp_verify_all_passed(const pp_verify_result* result);

#ifdef __cplusplus
}
#endif

#endif /* PARTPARITY_PARTPARITY_H */
