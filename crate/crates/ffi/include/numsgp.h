#ifndef NUMSGP_H
#define NUMSGP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum NumsgpStatus {
  NUMSGP_STATUS_OK = 0,
  NUMSGP_STATUS_NULL_POINTER = 1,
  /**
   * Empty list, non-positive entry, gcd > 1 or non-minimal generators.
   */
  NUMSGP_STATUS_INVALID_GENERATORS = 2,
  NUMSGP_STATUS_OVERFLOW = 3,
  NUMSGP_STATUS_NOT_AN_ELEMENT = 4,
  NUMSGP_STATUS_INDEX_OUT_OF_RANGE = 5,
  NUMSGP_STATUS_PRECONDITION_FAILED = 6,
  /**
   * The query needs a non-symmetric three-generated semigroup.
   */
  NUMSGP_STATUS_NOT_APPLICABLE = 7,
  NUMSGP_STATUS_BUFFER_TOO_SMALL = 8,
  NUMSGP_STATUS_INTERNAL = 9,
  NUMSGP_STATUS_PANIC = 10,
} NumsgpStatus;

/**
 * Opaque semigroup handle.
 */
typedef struct NumsgpSemigroup NumsgpSemigroup;

/**
 * Exponents of the 2x2 matrix whose minors define the semigroup ring.
 */
typedef struct NumsgpHerzog {
  int64_t alpha;
  int64_t beta;
  int64_t gamma;
  int64_t alpha_p;
  int64_t beta_p;
  int64_t gamma_p;
} NumsgpHerzog;

/**
 * Creates a semigroup from `len` minimal generators.
 *
 * # Safety
 * `gens` must point to `len` readable values and `out` must be writable.
 */
enum NumsgpStatus numsgp_semigroup_new(const int64_t *gens,
                                       size_t len,
                                       struct NumsgpSemigroup **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `h` must come from [`numsgp_semigroup_new`] and not be used afterwards.
 */
void numsgp_semigroup_free(struct NumsgpSemigroup *h);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum NumsgpStatus numsgp_multiplicity(const struct NumsgpSemigroup *h, int64_t *out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum NumsgpStatus numsgp_embedding_dimension(const struct NumsgpSemigroup *h, size_t *out);

/**
 * Copies the generators into `buf`; `len` receives their number.
 *
 * # Safety
 * `h` must be a live handle, `buf` must hold `cap` values and `len` must be
 * writable.
 */
enum NumsgpStatus numsgp_generators(const struct NumsgpSemigroup *h,
                                    int64_t *buf,
                                    size_t cap,
                                    size_t *len);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum NumsgpStatus numsgp_contains(const struct NumsgpSemigroup *h, int64_t n, bool *out);

/**
 * Largest integer not in the semigroup (-1 for the naturals).
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum NumsgpStatus numsgp_frobenius(const struct NumsgpSemigroup *h, int64_t *out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum NumsgpStatus numsgp_genus(const struct NumsgpSemigroup *h, int64_t *out);

/**
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum NumsgpStatus numsgp_is_symmetric(const struct NumsgpSemigroup *h, bool *out);

/**
 * Apery set with respect to the element `base`, indexed by residue.
 * `len` receives `base`, also when the buffer is too small.
 *
 * # Safety
 * `h` must be a live handle, `buf` must hold `cap` values and `len` must be
 * writable.
 */
enum NumsgpStatus numsgp_apery(const struct NumsgpSemigroup *h,
                               int64_t base,
                               int64_t *buf,
                               size_t cap,
                               size_t *len);

/**
 * First Hilbert coefficient of the semigroup ring.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum NumsgpStatus numsgp_e1(const struct NumsgpSemigroup *h, int64_t *out);

/**
 * Herzog matrix exponents; `NotApplicable` unless the semigroup is
 * three-generated and not symmetric.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum NumsgpStatus numsgp_herzog(const struct NumsgpSemigroup *h, struct NumsgpHerzog *out);

/**
 * Whether the associated graded ring is Cohen-Macaulay.
 *
 * # Safety
 * `h` must be a live handle; `out` must be writable.
 */
enum NumsgpStatus numsgp_graded_cm(const struct NumsgpSemigroup *h, bool *out);

/**
 * Message of the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *numsgp_last_error_message(void);

#endif  /* NUMSGP_H */
