#ifndef EHRGRAPH_H
#define EHRGRAPH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum EhrStatus {
  EHR_STATUS_OK = 0,
  EHR_STATUS_NULL_POINTER = 1,
  EHR_STATUS_INVALID_UTF8 = 2,
  EHR_STATUS_PARSE = 3,
  EHR_STATUS_INVALID_HYPERGRAPH = 4,
  EHR_STATUS_UNCOVERED = 5,
  EHR_STATUS_WORK_CAP = 6,
  EHR_STATUS_FIT_FAILED = 7,
  EHR_STATUS_INVALID_ARGUMENT = 8,
  EHR_STATUS_OUT_OF_RANGE = 9,
  EHR_STATUS_INTERNAL = 10,
  EHR_STATUS_PANIC = 11,
} EhrStatus;

/**
 * Which polynomial of the lowest-terms series to read.
 */
typedef enum EhrPoly {
  EHR_POLY_NUMERATOR = 0,
  EHR_POLY_DENOMINATOR = 1,
} EhrPoly;

typedef enum EhrTu {
  EHR_TU_TRUE = 0,
  EHR_TU_FALSE = 1,
  EHR_TU_INDETERMINATE = 2,
} EhrTu;

typedef enum EhrVerdict {
  EHR_VERDICT_PASS = 0,
  EHR_VERDICT_FAIL = 1,
  EHR_VERDICT_NOT_APPLICABLE = 2,
} EhrVerdict;

typedef struct EhrAnalysis EhrAnalysis;

typedef struct EhrHypergraph EhrHypergraph;

/**
 * Options for [`ehr_analyze`]; start from [`ehr_options_default`].
 */
typedef struct EhrOptions {
  size_t margin;
  /**
   * Largest dilation counted; ignored unless `has_n_max`.
   */
  uint64_t n_max;
  bool has_n_max;
  bool graph_box;
  uint64_t tu_cap;
  uint64_t vertex_cap;
} EhrOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into the library on the same thread.
 */
const char *ehr_last_error(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void ehr_string_free(char *s);

/**
 * Parse the text or JSON hypergraph format.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum EhrStatus ehr_hypergraph_parse(const char *text, struct EhrHypergraph **out);

/**
 * Build from a flat list of 1-based vertex ids; edge `i` takes the next
 * `edge_sizes[i]` entries of `vertices`.
 *
 * # Safety
 * `edge_sizes` must hold `num_edges` values and `vertices` their sum.
 */
enum EhrStatus ehr_hypergraph_new(size_t num_vertices,
                                  const size_t *vertices,
                                  const size_t *edge_sizes,
                                  size_t num_edges,
                                  struct EhrHypergraph **out);

/**
 * `family` is one of path, cycle, complete, complete-bipartite, hypercube.
 *
 * # Safety
 * `family` must be a NUL-terminated string and `params` hold `num_params` values.
 */
enum EhrStatus ehr_hypergraph_generate(const char *family,
                                       const int64_t *params,
                                       size_t num_params,
                                       struct EhrHypergraph **out);

/**
 * # Safety
 * `h` must be null or a live handle.
 */
void ehr_hypergraph_free(struct EhrHypergraph *h);

/**
 * # Safety
 * `h` must be a live handle.
 */
enum EhrStatus ehr_hypergraph_num_vertices(const struct EhrHypergraph *h, size_t *out);

/**
 * # Safety
 * `h` must be a live handle.
 */
enum EhrStatus ehr_hypergraph_num_edges(const struct EhrHypergraph *h, size_t *out);

/**
 * The hypergraph in the text format.
 *
 * # Safety
 * `h` must be a live handle; free the result with [`ehr_string_free`].
 */
enum EhrStatus ehr_hypergraph_to_text(const struct EhrHypergraph *h, char **out);

/**
 * Lattice points in the `n`-th dilation, as a decimal string.
 *
 * # Safety
 * `h` must be a live handle; free the result with [`ehr_string_free`].
 */
enum EhrStatus ehr_count_dilation(const struct EhrHypergraph *h,
                                  uint64_t n,
                                  bool graph_box,
                                  char **out);

struct EhrOptions ehr_options_default(void);

/**
 * Run the full analysis. `options` may be null for the defaults.
 *
 * # Safety
 * `h` must be a live handle and `options` null or valid.
 */
enum EhrStatus ehr_analyze(const struct EhrHypergraph *h,
                           const struct EhrOptions *options,
                           struct EhrAnalysis **out);

/**
 * # Safety
 * `a` must be null or a live handle.
 */
void ehr_analysis_free(struct EhrAnalysis *a);

/**
 * The series as text, e.g. `(1+x)/(1-x)^4`.
 *
 * # Safety
 * `a` must be a live handle; free the result with [`ehr_string_free`].
 */
enum EhrStatus ehr_analysis_series(const struct EhrAnalysis *a, char **out);

/**
 * The full report as JSON.
 *
 * # Safety
 * `a` must be a live handle; free the result with [`ehr_string_free`].
 */
enum EhrStatus ehr_analysis_json(const struct EhrAnalysis *a, char **out);

/**
 * Number of coefficients (degree + 1).
 *
 * # Safety
 * `a` must be a live handle.
 */
enum EhrStatus ehr_analysis_coeff_count(const struct EhrAnalysis *a,
                                        enum EhrPoly which,
                                        size_t *out);

/**
 * Coefficient of `x^i` as an exact decimal or `p/q` string.
 *
 * # Safety
 * `a` must be a live handle; free the result with [`ehr_string_free`].
 */
enum EhrStatus ehr_analysis_coeff(const struct EhrAnalysis *a,
                                  enum EhrPoly which,
                                  size_t i,
                                  char **out);

/**
 * Normalized volume as `p/q` (or an integer).
 *
 * # Safety
 * `a` must be a live handle; free the result with [`ehr_string_free`].
 */
enum EhrStatus ehr_analysis_volume(const struct EhrAnalysis *a, char **out);

/**
 * # Safety
 * `a` must be a live handle.
 */
enum EhrStatus ehr_analysis_tu(const struct EhrAnalysis *a, enum EhrTu *out);

/**
 * # Safety
 * `a` must be a live handle.
 */
enum EhrStatus ehr_analysis_integral(const struct EhrAnalysis *a, bool *out);

/**
 * True when no applicable check failed.
 *
 * # Safety
 * `a` must be a live handle.
 */
enum EhrStatus ehr_analysis_all_pass(const struct EhrAnalysis *a, bool *out);

/**
 * # Safety
 * `a` must be a live handle.
 */
enum EhrStatus ehr_analysis_verdict_count(const struct EhrAnalysis *a, size_t *out);

/**
 * Name and outcome of check `i`. `name` may be null if only the status is wanted.
 *
 * # Safety
 * `a` must be a live handle; free `*name` with [`ehr_string_free`].
 */
enum EhrStatus ehr_analysis_verdict(const struct EhrAnalysis *a,
                                    size_t i,
                                    char **name,
                                    enum EhrVerdict *status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EHRGRAPH_H */
