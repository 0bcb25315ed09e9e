#ifndef DIVISOR_LAB_H
#define DIVISOR_LAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

// Which computation of `D(I)` to run.
typedef enum DlRoute {
  // `(x : (x : I))` for a maximal regular sequence `x` in `I`.
  DL_ROUTE_COLON = 0,
  // `Ann(Ext^g(R/I, R))` from a free resolution.
  DL_ROUTE_EXT = 1,
} DlRoute;

// Result code of every fallible call.
typedef enum DlStatus {
  DL_STATUS_OK = 0,
  DL_STATUS_NULL_POINTER = 1,
  DL_STATUS_INVALID_UTF8 = 2,
  // Unparsable ring, polynomial or ideal text, or an invalid argument.
  DL_STATUS_INPUT_ERROR = 3,
  // A Groebner basis computation hit the pair budget.
  DL_STATUS_BUDGET_EXCEEDED = 4,
  // The operation is undefined for the arguments (unit ideal, quotient ring, ...).
  DL_STATUS_MATH_ERROR = 5,
  DL_STATUS_PANIC = 6,
} DlStatus;

// Ideal of a [`DlRing`]. Keeps its ring alive on its own.
typedef struct DlIdeal DlIdeal;

// Ambient ring: a polynomial ring, possibly modulo relations.
typedef struct DlRing DlRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or NULL after a success.
// The pointer stays valid until the next library call on the same thread.
const char *dl_last_error(void);

// Library version as a static NUL-terminated string.
const char *dl_version(void);

// # Safety
// `s` must come from this library and not have been freed already. NULL is ignored.
void dl_string_free(char *s);

// Builds a ring from text such as `QQ[x,y]` or `GF(2)[x,y,z]/(x^2 + y^3)`.
// `order` is `grevlex` or `lex`, NULL meaning `grevlex`. `pair_budget` of 0
// keeps the default Groebner pair budget.
//
// # Safety
// `spec` and `order` (if non-NULL) must be NUL-terminated strings; `out` must be writable.
enum DlStatus dl_ring_new(const char *spec,
                          const char *order,
                          size_t pair_budget,
                          struct DlRing **out);

// # Safety
// `ring` must come from [`dl_ring_new`] and not have been freed. NULL is ignored.
void dl_ring_free(struct DlRing *ring);

// Parses a comma-separated generator list, e.g. `x^2, x*y`.
//
// # Safety
// `ring` must be a live handle, `gens` a NUL-terminated string, `out` writable.
enum DlStatus dl_ideal_parse(const struct DlRing *ring, const char *gens, struct DlIdeal **out);

// # Safety
// `ideal` must come from this library and not have been freed. NULL is ignored.
void dl_ideal_free(struct DlIdeal *ideal);

// Renders the reduced Groebner basis as `(g1, g2, ...)`. Free the result with [`dl_string_free`].
//
// # Safety
// `ideal` must be a live handle and `out` writable.
enum DlStatus dl_ideal_to_string(const struct DlIdeal *ideal, char **out);

// `D(I)` by the chosen route; the grade is written to `grade_out` when it is non-NULL.
//
// # Safety
// `ideal` must be a live handle, `out` writable, `grade_out` writable or NULL.
enum DlStatus dl_ideal_divisorial(const struct DlIdeal *ideal,
                                  enum DlRoute route,
                                  struct DlIdeal **out,
                                  size_t *grade_out);

// `(I : J)`.
//
// # Safety
// Both handles must be live ideals of the same ring; `out` writable.
enum DlStatus dl_ideal_colon(const struct DlIdeal *i,
                             const struct DlIdeal *j,
                             struct DlIdeal **out);

// `I ∩ J`.
//
// # Safety
// Both handles must be live ideals of the same ring; `out` writable.
enum DlStatus dl_ideal_intersect(const struct DlIdeal *i,
                                 const struct DlIdeal *j,
                                 struct DlIdeal **out);

// `(I : J^∞)`; a NULL `j` saturates by the ideal of the variables.
//
// # Safety
// `i` must be a live handle, `j` a live handle of the same ring or NULL, `out` writable.
enum DlStatus dl_ideal_saturate(const struct DlIdeal *i,
                                const struct DlIdeal *j,
                                struct DlIdeal **out);

// Length of a maximal regular sequence in `I`.
//
// # Safety
// `ideal` must be a live handle and `out` writable.
enum DlStatus dl_ideal_grade(const struct DlIdeal *ideal, size_t *out);

// Ideal equality, compared through reduced Groebner bases.
//
// # Safety
// Both handles must be live ideals of the same ring; `out` writable.
enum DlStatus dl_ideal_equals(const struct DlIdeal *i, const struct DlIdeal *j, bool *out);

// Membership of the polynomial written in `poly`.
//
// # Safety
// `ideal` must be a live handle, `poly` a NUL-terminated string, `out` writable.
enum DlStatus dl_ideal_contains(const struct DlIdeal *ideal, const char *poly, bool *out);

// `D(I)` for the semigroup ideal generated by `exps` in the numerical
// semigroup generated by `gens`, rendered like `{10,11,12} ∪ [14,∞)`.
// Free the result with [`dl_string_free`].
//
// # Safety
// `gens` must point to `n_gens` values, `exps` to `n_exps` values, `out` writable.
enum DlStatus dl_semigroup_divisorial(const uint64_t *gens,
                                      size_t n_gens,
                                      const int64_t *exps,
                                      size_t n_exps,
                                      char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIVISOR_LAB_H */
