#ifndef GAUSS_H
#define GAUSS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum GaussStatus {
  GAUSS_STATUS_OK = 0,
  GAUSS_STATUS_NULL_POINTER = 1,
  GAUSS_STATUS_INVALID_UTF8 = 2,
  GAUSS_STATUS_PARSE_ERROR = 3,
  GAUSS_STATUS_MATH_ERROR = 4,
  GAUSS_STATUS_INSUFFICIENT_TRUNCATION = 5,
  GAUSS_STATUS_PANIC = 6,
} GaussStatus;

/**
 * A rational function in normal form.
 */
typedef struct GaussRationalFunction GaussRationalFunction;

/**
 * A truncated Laurent expansion.
 */
typedef struct GaussSeries GaussSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *gauss_last_error_message(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void gauss_string_free(char *s);

/**
 * Parses `num / den`. `nvars = 0` uses the largest variable index present.
 *
 * # Safety
 * `num` and `den` must be NUL-terminated strings; `out` must be writable.
 */
enum GaussStatus gauss_rf_parse(const char *num,
                                const char *den,
                                size_t nvars,
                                struct GaussRationalFunction **out);

/**
 * # Safety
 * `f` must be NULL or a handle from [`gauss_rf_parse`], not yet freed.
 */
void gauss_rf_free(struct GaussRationalFunction *f);

/**
 * Number of variables, or 0 for NULL.
 *
 * # Safety
 * `f` must be NULL or a live handle.
 */
size_t gauss_rf_nvars(const struct GaussRationalFunction *f);

/**
 * # Safety
 * `f` must be a live handle and `out` writable.
 */
enum GaussStatus gauss_rf_to_string(const struct GaussRationalFunction *f, char **out);

/**
 * Expands at `vertex` (length `vertex_len`), or at the canonical vertex
 * when `vertex` is NULL, up to α-degree `bound`.
 *
 * # Safety
 * `f` must be a live handle, `vertex` NULL or readable for `vertex_len`
 * values, and `out` writable.
 */
enum GaussStatus gauss_expand(const struct GaussRationalFunction *f,
                              const int64_t *vertex,
                              size_t vertex_len,
                              int64_t bound,
                              struct GaussSeries **out);

/**
 * # Safety
 * `s` must be NULL or a handle from [`gauss_expand`], not yet freed.
 */
void gauss_series_free(struct GaussSeries *s);

/**
 * Coefficient at exponent `k` as `"num/den"`.
 *
 * # Safety
 * `s` must be a live handle, `k` readable for `len` values, `out` writable.
 */
enum GaussStatus gauss_series_coefficient(const struct GaussSeries *s,
                                          const int64_t *k,
                                          size_t len,
                                          char **out);

/**
 * All stored coefficients, one `k1 … kn : num/den` line each.
 *
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum GaussStatus gauss_series_dump(const struct GaussSeries *s, char **out);

/**
 * Checks Gauss congruences at the canonical vertex and writes the JSON
 * report. Returns `InsufficientTruncation` (with the report still written)
 * when some prime could not be tested at this bound.
 *
 * # Safety
 * `f` must be a live handle, `primes` readable for `nprimes` values and
 * `json_out` writable.
 */
enum GaussStatus gauss_check(const struct GaussRationalFunction *f,
                             const uint64_t *primes,
                             size_t nprimes,
                             uint32_t r_max,
                             uint32_t strength,
                             int64_t bound,
                             char **json_out);

/**
 * Decides a univariate function and writes the verdict as JSON.
 *
 * # Safety
 * `f` must be a live handle and `json_out` writable.
 */
enum GaussStatus gauss_minton(const struct GaussRationalFunction *f, char **json_out);

/**
 * Decides a function whose denominator is linear in every variable.
 *
 * # Safety
 * `f` must be a live handle and `out` writable.
 */
enum GaussStatus gauss_classify_linear(const struct GaussRationalFunction *f, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GAUSS_H */
