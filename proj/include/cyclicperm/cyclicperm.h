/*
 * cyclicperm.h
 *
 * C interface to the cyclic permutation pattern-avoidance library.
 *
 * Every fallible call returns a cp_status. On failure a human-readable
 * message for the calling thread is available from cp_last_error() until the
 * next failing call on that thread. Objects handed out through pointer
 * out-parameters are owned by the caller and released with the matching
 * *_free function.
 *
 * Permutations are passed as arrays of 1-based ints. Patterns are passed as
 * digit strings such as "1432". A k of CP_K_NONE drops the one-line
 * decreasing-pattern condition.
 */

#ifndef CYCLICPERM_H
#define CYCLICPERM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CP_API __declspec(dllexport)
#else
#define CP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cp_status {
  CP_OK = 0,
  CP_ERR_INVALID_ARGUMENT = 1,
  CP_ERR_NOT_A_PERMUTATION = 2,
  CP_ERR_NOT_CYCLIC = 3,
  CP_ERR_DOMAIN = 4,
  CP_ERR_LIMIT_EXCEEDED = 5,
  CP_ERR_IO = 6,
  CP_ERR_INTERNAL = 7
} cp_status;

#define CP_K_NONE 0
#define CP_MAX_SIZE 20

typedef enum cp_format { CP_FORMAT_TEXT = 0, CP_FORMAT_CSV = 1, CP_FORMAT_JSON = 2 } cp_format;

typedef enum cp_check {
  CP_CHECK_ROTATIONS_VS_321_2143 = 0, /* "rotations" */
  CP_CHECK_C2_STRUCTURE = 1,          /* "c2-structure" */
  CP_CHECK_DELTA5_REDUNDANT = 2       /* "delta5" */
} cp_check;

typedef struct cp_report cp_report;
typedef struct cp_table cp_table;
typedef struct cp_family_list cp_family_list;

typedef struct cp_row {
  int n;
  int k;         /* CP_K_NONE when absent */
  const char* j; /* owned by the table */
  uint64_t brute;
  int has_formula;
  uint64_t formula;
  int match;
} cp_row;

typedef struct cp_equivalence_result {
  int n_min;
  int n_max;
  uint64_t forms_checked;
  uint64_t counterexamples;
  int first_counterexample[CP_MAX_SIZE];
  size_t first_counterexample_size; /* 0 when there is none */
} cp_equivalence_result;

CP_API const char* cp_version(void);
CP_API const char* cp_status_name(cp_status status);
CP_API const char* cp_last_error(void);
CP_API void cp_string_free(char* text);

/* ---- permutations and patterns ---- */

/* out_cycle receives n letters starting with 1. */
CP_API cp_status cp_standard_cycle_form(const int* one_line, size_t n, int* out_cycle);
CP_API cp_status cp_to_one_line(const int* cycle, size_t n, int* out_one_line);
CP_API cp_status cp_contains(const int* word, size_t n, const char* pattern, int* out_contains);
CP_API cp_status cp_lds_length(const int* word, size_t n, int* out_length);
CP_API cp_status cp_is_member(const int* cycle, size_t n, int k, const char* tau, int* out_member);

/* ---- exhaustive counting ---- */

/* threads == 0 selects the available hardware parallelism. tau may be NULL for 1432. */
CP_API cp_status cp_count(int n, int k, const char* tau, unsigned threads, cp_report** out);
CP_API void cp_report_free(cp_report* report);
CP_API int cp_report_n(const cp_report* report);
CP_API int cp_report_k(const cp_report* report);
CP_API uint64_t cp_report_total(const cp_report* report);
CP_API cp_status cp_report_per_j(const cp_report* report, int j, uint64_t* out);
/* case_tag is one of "i", "ii", "iii", "iv", "n-1", "n"; j <= 0 sums over all j. */
CP_API cp_status cp_report_case(const cp_report* report, int j, const char* case_tag,
                                uint64_t* out);

/* ---- closed forms ---- */

CP_API cp_status cp_total_formula(int n, int k, uint64_t* out_value, int* out_domain_ok);
CP_API cp_status cp_avoiding_321_2143_total(int n, uint64_t* out_value);

/* ---- comparison tables ---- */

CP_API cp_status cp_table_from_report(const cp_report* report, int per_j, int cases,
                                      cp_table** out);
CP_API cp_status cp_verify(int n_min, int n_max, const int* ks, size_t k_count, unsigned threads,
                           cp_table** out);
CP_API size_t cp_table_size(const cp_table* table);
CP_API cp_status cp_table_row(const cp_table* table, size_t index, cp_row* out);
/* 1 when every row has a formula equal to its brute count. */
CP_API int cp_table_all_match(const cp_table* table);
/* 1 when no row with a formula disagrees with its brute count. */
CP_API int cp_table_no_mismatch(const cp_table* table);
CP_API cp_status cp_table_render(const cp_table* table, cp_format format, char** out_text);
CP_API cp_status cp_table_write(const cp_table* table, cp_format format, const char* path);
CP_API void cp_table_free(cp_table* table);

/* ---- b-files ---- */

/* from_oracle != 0 counts exhaustively (n_max <= 12); otherwise closed forms (n_min >= 5). */
CP_API cp_status cp_bfile_render(int k, int n_min, int n_max, int from_oracle, unsigned threads,
                                 char** out_text);
CP_API cp_status cp_bfile_write(int k, int n_min, int n_max, int from_oracle, unsigned threads,
                                const char* path);
CP_API cp_status cp_bfile_compare(const char* path, int k, unsigned threads, cp_table** out);

/* ---- exhaustive equivalence checks ---- */

CP_API cp_status cp_equivalence(cp_check check, int n_max, cp_equivalence_result* out);

/* ---- explicit families ---- */

CP_API cp_status cp_families(int n, int k, cp_family_list** out);
CP_API size_t cp_family_list_size(const cp_family_list* list);
/* Pointers stay valid until the list is freed. verified is the result of
   re-running the membership test on the generated cycle. */
CP_API cp_status cp_family_member(const cp_family_list* list, size_t index, const char** tag,
                                  const int** params, size_t* param_count, const int** cycle,
                                  size_t* cycle_size, int* verified);
CP_API void cp_family_list_free(cp_family_list* list);

#ifdef __cplusplus
}
#endif

#endif /* CYCLICPERM_H */
