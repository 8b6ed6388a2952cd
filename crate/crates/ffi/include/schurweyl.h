#ifndef SCHURWEYL_H
#define SCHURWEYL_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum SwStatus {
  SW_STATUS_OK = 0,
  SW_STATUS_NULL_POINTER = 1,
  SW_STATUS_INVALID_UTF8 = 2,
  SW_STATUS_PARSE = 3,
  SW_STATUS_INVALID_FIELD = 4,
  SW_STATUS_OUT_OF_RANGE = 5,
  SW_STATUS_DIMENSION = 6,
  SW_STATUS_PARAMETER = 7,
  SW_STATUS_GUARD = 8,
  SW_STATUS_PRECONDITION = 9,
  /**
   * a verification run finished with failed checks
   */
  SW_STATUS_CHECK_FAILED = 10,
  SW_STATUS_PANIC = 11,
} SwStatus;

/**
 * A Brauer diagram.
 */
typedef struct SwDiagram SwDiagram;

/**
 * An element of B_n(x) over ℚ or a prime field.
 */
typedef struct SwElement SwElement;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failing call on this thread; empty after a
 * success. The pointer stays valid until the next call on the same thread.
 */
const char *sw_last_error(void);

/**
 * Library version as a static string.
 */
const char *sw_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void sw_string_free(char *s);

/**
 * `(2n-1)!!`, the number of Brauer n-diagrams.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum SwStatus sw_diagram_count(uint32_t n, uint64_t *out);

/**
 * Builds a diagram from a JSON array of one-based partners.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` valid for writes.
 */
enum SwStatus sw_diagram_from_json(const char *json, struct SwDiagram **out);

/**
 * `s_i` (`kind = 0`) or `e_i` (`kind = 1`) on `n` strands.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum SwStatus sw_diagram_generator(uint32_t kind, uint32_t i, uint32_t n, struct SwDiagram **out);

/**
 * Stacks `a` on top of `b`; writes the product and the number of closed loops.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` and `loops` valid for writes.
 */
enum SwStatus sw_diagram_compose(const struct SwDiagram *a,
                                 const struct SwDiagram *b,
                                 struct SwDiagram **out,
                                 uint32_t *loops);

/**
 * # Safety
 * `d` must be a live handle and `out` valid for writes.
 */
enum SwStatus sw_diagram_to_json(const struct SwDiagram *d, char **out);

/**
 * # Safety
 * `d` must be null or a handle not yet freed.
 */
void sw_diagram_free(struct SwDiagram *d);

/**
 * Product of generator letters such as `"s1 e2 s1"` in B_n(x); the empty
 * word gives the identity. `field` is `"q"` or `"fp:P"`.
 *
 * # Safety
 * `field` and `word` must be NUL-terminated strings and `out` valid for writes.
 */
enum SwStatus sw_element_from_word(const char *field,
                                   uint32_t n,
                                   int64_t x,
                                   const char *word,
                                   struct SwElement **out);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` valid for writes.
 */
enum SwStatus sw_element_multiply(const struct SwElement *a,
                                  const struct SwElement *b,
                                  struct SwElement **out);

/**
 * # Safety
 * `a`, `b` must be live handles and `out` valid for writes.
 */
enum SwStatus sw_element_add(const struct SwElement *a,
                             const struct SwElement *b,
                             struct SwElement **out);

/**
 * `[[diagram, "coefficient"], ...]` in diagram order.
 *
 * # Safety
 * `e` must be a live handle and `out` valid for writes.
 */
enum SwStatus sw_element_to_json(const struct SwElement *e, char **out);

/**
 * # Safety
 * `e` must be null or a handle not yet freed.
 */
void sw_element_free(struct SwElement *e);

/**
 * Dimension of the span of the action matrices of all n-diagrams on
 * V^{⊗n}, dim V = 2m.
 *
 * # Safety
 * `field` must be a NUL-terminated string and `out` valid for writes.
 */
enum SwStatus sw_phi_rank(const char *field, uint32_t m, uint32_t n, uint64_t *out);

/**
 * Comparison of the Brauer image with the commutant of the divided powers,
 * as a JSON object.
 *
 * # Safety
 * `field` must be a NUL-terminated string and `out` valid for writes.
 */
enum SwStatus sw_duality_report(const char *field,
                                uint32_t m,
                                uint32_t n,
                                uint64_t max_dim,
                                char **out);

/**
 * Runs `schurweyl verify` with whitespace-separated arguments (for example
 * `"duality --m 2 --n 3 --field q"`) and returns the JSON report.
 * Returns [`SwStatus::CheckFailed`] when a check fails; the report is still
 * written.
 *
 * # Safety
 * `args` must be a NUL-terminated string and `out` valid for writes.
 */
enum SwStatus sw_verify(const char *args, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SCHURWEYL_H */
