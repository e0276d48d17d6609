#ifndef DIATOMIC_H
#define DIATOMIC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DiaPurity {
  DIA_PURITY_RATIONAL = 0,
  DIA_PURITY_PURE_QUADRATIC = 1,
  DIA_PURITY_NON_PURE_QUADRATIC = 2,
} DiaPurity;

/**
 * Outcome of an FFI call.
 */
typedef enum DiaStatus {
  DIA_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  DIA_STATUS_NULL_POINTER = 1,
  /**
   * An input string was not valid UTF-8.
   */
  DIA_STATUS_INVALID_UTF8 = 2,
  /**
   * An input string did not match the expected grammar.
   */
  DIA_STATUS_PARSE = 3,
  /**
   * The input parsed but lies outside the operation's domain.
   */
  DIA_STATUS_DOMAIN = 4,
  /**
   * The input is a special case the operation rejects, such as a
   * perfect square passed to the square-root design.
   */
  DIA_STATUS_UNSUPPORTED = 5,
  /**
   * A Rust panic was caught at the boundary.
   */
  DIA_STATUS_INTERNAL = 6,
} DiaStatus;

typedef enum DiaVerdict {
  DIA_VERDICT_DIVERGES_TO_INFINITY = 0,
  DIA_VERDICT_ZERO_IF_DIFFERENTIABLE = 1,
} DiaVerdict;

/**
 * Opaque design handle (finite or eventually periodic).
 */
typedef struct DiaDesign DiaDesign;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static nul-terminated string.
 */
const char *dia_version(void);

/**
 * Copy of the calling thread's most recent error message, or null if the
 * last call succeeded. Free with `dia_string_free`.
 */
char *dia_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void dia_string_free(char *s);

/**
 * Releases a design handle. Null is ignored.
 *
 * # Safety
 * `h` must be null or a handle returned by this library, not yet freed.
 */
void dia_design_free(struct DiaDesign *h);

/**
 * Stern's diatomic value `a_m` for a decimal `m`.
 *
 * # Safety
 * `m` must be a nul-terminated string; `out` must be valid for writes.
 */
enum DiaStatus dia_stern(const char *m, char **out);

/**
 * The value at order `m` of row `depth` of the diatomic table.
 *
 * # Safety
 * `m` must be a nul-terminated string; `out` must be valid for writes.
 */
enum DiaStatus dia_sdi(uint64_t depth, const char *m, char **out);

/**
 * Parses a design such as `"11001"`, `"1(10)"` or `"100t"`.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be valid for writes.
 */
enum DiaStatus dia_design_parse(const char *text, struct DiaDesign **out);

/**
 * The design whose binary decimal is `theta` (`"a/b"` in `[0, 1]`).
 *
 * # Safety
 * `theta` must be a nul-terminated string; `out` must be valid for writes.
 */
enum DiaStatus dia_design_of_theta(const char *theta, struct DiaDesign **out);

/**
 * Canonical text form of a design.
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid for writes.
 */
enum DiaStatus dia_design_to_string(const struct DiaDesign *h, char **out);

/**
 * The design's binary decimal as `"a/b"`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid for writes.
 */
enum DiaStatus dia_design_theta(const struct DiaDesign *h, char **out);

/**
 * Whether the design is infinite (eventually periodic).
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid for writes.
 */
enum DiaStatus dia_design_is_periodic(const struct DiaDesign *h, bool *out);

/**
 * The bitwise conjugate as a new handle.
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid for writes.
 */
enum DiaStatus dia_design_conjugate(const struct DiaDesign *h, struct DiaDesign **out);

/**
 * Concatenation `first · second`; `first` must be finite.
 *
 * # Safety
 * Both handles must be live; `out` must be valid for writes.
 */
enum DiaStatus dia_design_compose(const struct DiaDesign *first,
                                  const struct DiaDesign *second,
                                  struct DiaDesign **out);

/**
 * The unimodular matrix of a finite design as `"a,b;c,d"`.
 *
 * # Safety
 * `h` must be a live handle; `out` must be valid for writes.
 */
enum DiaStatus dia_design_matrix(const struct DiaDesign *h, char **out);

/**
 * The assembly function at a rational `theta`: `"a/b"` for dyadic input,
 * otherwise a description of the quadratic irrational.
 *
 * # Safety
 * `theta` must be a nul-terminated string; `out` must be valid for writes.
 */
enum DiaStatus dia_assembly_eval(const char *theta, char **out);

/**
 * The reduced design whose assembly value is `value` (`"a/b"` or `"inf"`).
 *
 * # Safety
 * `value` must be a nul-terminated string; `out` must be valid for writes.
 */
enum DiaStatus dia_assembly_inverse(const char *value, struct DiaDesign **out);

/**
 * The periodic design whose assembly value is `sqrt(q)`.
 *
 * # Safety
 * `q` must be a nul-terminated string; `out` must be valid for writes.
 */
enum DiaStatus dia_sqrt_design(const char *q, struct DiaDesign **out);

/**
 * Purity class of the assembly value at `theta`.
 *
 * # Safety
 * `theta` must be a nul-terminated string; `out` must be valid for writes.
 */
enum DiaStatus dia_purity(const char *theta, enum DiaPurity *out);

/**
 * Derivative verdict at a rational `eta` in `(0, 1)`.
 *
 * # Safety
 * `eta` must be a nul-terminated string; `out` must be valid for writes.
 */
enum DiaStatus dia_derivative_verdict(const char *eta, enum DiaVerdict *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIATOMIC_H */
