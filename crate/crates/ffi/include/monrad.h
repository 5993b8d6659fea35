#ifndef MONRAD_H
#define MONRAD_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MonradStatus {
  MONRAD_STATUS_OK = 0,
  MONRAD_STATUS_IO = 1,
  MONRAD_STATUS_PARSE = 2,
  MONRAD_STATUS_PRECONDITION = 3,
  MONRAD_STATUS_BUDGET = 4,
  MONRAD_STATUS_INVARIANT = 5,
  MONRAD_STATUS_NULL_POINTER = 6,
  MONRAD_STATUS_INVALID_UTF8 = 7,
  MONRAD_STATUS_OUT_OF_RANGE = 8,
  MONRAD_STATUS_PANIC = 9,
} MonradStatus;

typedef enum MonradPowerKind {
  MONRAD_POWER_KIND_ORDINARY = 0,
  MONRAD_POWER_KIND_SYMBOLIC = 1,
} MonradPowerKind;

typedef enum MonradMethod {
  MONRAD_METHOD_BRUTE_FORCE = 0,
  MONRAD_METHOD_POLYHEDRAL = 1,
} MonradMethod;

/**
 * A computed set of associated radicals with their witnesses.
 */
typedef struct MonradAsr MonradAsr;

typedef struct MonradHypergraph MonradHypergraph;

/**
 * A monomial ideal, optionally with its primary decomposition.
 */
typedef struct MonradIdeal MonradIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *monrad_last_error(void);

/**
 * # Safety
 * `s` must be null or come from this library.
 */
void monrad_string_free(char *s);

/**
 * Parses an ideal from text (`(x1^2*x2, x3)`) or any JSON input format. A
 * hypergraph yields its cover ideal.
 *
 * # Safety
 * `src` must be a nul-terminated string; `out` must be writable.
 */
enum MonradStatus monrad_ideal_parse(const char *src, struct MonradIdeal **out);

/**
 * # Safety
 * `ideal` must be null or come from this library, and not be used afterwards.
 */
void monrad_ideal_free(struct MonradIdeal *ideal);

/**
 * Minimal generators as text; free with [`monrad_string_free`].
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum MonradStatus monrad_ideal_to_string(const struct MonradIdeal *ideal, char **out);

/**
 * `I^s` or `I^(s)` as a new handle.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum MonradStatus monrad_ideal_power(const struct MonradIdeal *ideal,
                                     uint32_t s,
                                     enum MonradPowerKind kind,
                                     struct MonradIdeal **out);

/**
 * `asr(I^s)` or `asr(I^(s))`.
 *
 * # Safety
 * `ideal` must be a live handle; `out` must be writable.
 */
enum MonradStatus monrad_asr_compute(const struct MonradIdeal *ideal,
                                     uint32_t s,
                                     enum MonradPowerKind kind,
                                     enum MonradMethod method,
                                     struct MonradAsr **out);

/**
 * # Safety
 * `asr` must be null or come from this library, and not be used afterwards.
 */
void monrad_asr_free(struct MonradAsr *asr);

/**
 * Number of members; 0 for a null handle.
 *
 * # Safety
 * `asr` must be null or a live handle.
 */
size_t monrad_asr_len(const struct MonradAsr *asr);

/**
 * Member `index` in canonical order. Both strings are borrowed from the
 * handle and live as long as it does.
 *
 * # Safety
 * `asr` must be a live handle; `radical` and `witness` must be writable.
 */
enum MonradStatus monrad_asr_member(const struct MonradAsr *asr,
                                    size_t index,
                                    const char **radical,
                                    const char **witness);

/**
 * Hochster depth: the minimum of `depth R/J` over the members. `prime = 0`
 * computes over the rationals, otherwise over GF(prime).
 *
 * # Safety
 * `asr` must be a live handle; `out` must be writable.
 */
enum MonradStatus monrad_depth(const struct MonradAsr *asr, uint64_t prime, size_t *out);

/**
 * Parses `{"n": .., "edges": [[1,2], ..]}` (1-based vertices).
 *
 * # Safety
 * `src` must be a nul-terminated string; `out` must be writable.
 */
enum MonradStatus monrad_hypergraph_parse(const char *src, struct MonradHypergraph **out);

/**
 * # Safety
 * `h` must be null or come from this library, and not be used afterwards.
 */
void monrad_hypergraph_free(struct MonradHypergraph *h);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum MonradStatus monrad_hypergraph_is_balanced(const struct MonradHypergraph *h, bool *out);

/**
 * The cover ideal, generated by the minimal vertex covers.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum MonradStatus monrad_hypergraph_cover_ideal(const struct MonradHypergraph *h,
                                                struct MonradIdeal **out);

/**
 * `⌈n · b^((n+2)/2)⌉`, the power past which symbolic asr sets are constant.
 *
 * # Safety
 * `out` must be writable.
 */
enum MonradStatus monrad_s0_bound(size_t n, size_t bight, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MONRAD_H */
