#ifndef PSIGROUP_H
#define PSIGROUP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum PsgStatus {
  PSG_STATUS_OK = 0,
  PSG_STATUS_NULL_POINTER = 1,
  PSG_STATUS_INVALID_ARGUMENT = 2,
  PSG_STATUS_INDEX_OUT_OF_RANGE = 3,
  PSG_STATUS_INVALID_GROUP = 4,
  PSG_STATUS_INVALID_SUBGROUP = 5,
  PSG_STATUS_CAP_EXCEEDED = 6,
  PSG_STATUS_NOT_NILPOTENT = 7,
  PSG_STATUS_PARSE = 8,
  PSG_STATUS_IO = 9,
  PSG_STATUS_INTERNAL = 10,
  PSG_STATUS_PANIC = 11,
} PsgStatus;

/**
 * Which sweep `psg_verify` runs.
 */
typedef enum PsgSuite {
  PSG_SUITE_THEOREM = 0,
  PSG_SUITE_CONJECTURE = 1,
  PSG_SUITE_LEMMAS = 2,
} PsgSuite;

/**
 * Opaque group handle.
 */
typedef struct PsgGroup PsgGroup;

/**
 * Counts from a verification sweep over one group.
 */
typedef struct PsgVerifySummary {
  uint64_t pairs_checked;
  uint64_t violations;
  uint64_t equalities;
  uint64_t unexplained_equalities;
} PsgVerifySummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a group from a spec string such as `dihedral:4` or
 * `product(cyclic:3;sym:3)`. `cap` bounds the order; 0 means the default.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum PsgStatus psg_group_from_spec(const char *spec, size_t cap, struct PsgGroup **out);

/**
 * Builds a group from a row-major `order × order` Cayley table of 0-based
 * indices. The table is validated; the identity is renumbered to 0.
 *
 * # Safety
 * `table` must point to `order * order` readable entries and `out` must be
 * a valid pointer.
 */
enum PsgStatus psg_group_from_table(const uint32_t *table, size_t order, struct PsgGroup **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `g` must be null or a handle from this library not yet freed.
 */
void psg_group_free(struct PsgGroup *g);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum PsgStatus psg_group_order(const struct PsgGroup *g, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum PsgStatus psg_group_mul(const struct PsgGroup *g, size_t a, size_t b, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum PsgStatus psg_group_element_order(const struct PsgGroup *g, size_t a, size_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum PsgStatus psg_group_is_nilpotent(const struct PsgGroup *g, bool *out);

/**
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum PsgStatus psg_group_subgroup_count(const struct PsgGroup *g, size_t *out);

/**
 * Sum of all element orders.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum PsgStatus psg_psi(const struct PsgGroup *g, uint64_t *out);

/**
 * Sum of relative orders with respect to the subgroup generated by the
 * `len` element indices at `gens`. `len == 0` selects the trivial subgroup.
 *
 * # Safety
 * `g` must be a live handle, `gens` must point to `len` readable entries
 * (or may be null when `len == 0`), and `out` must be a valid pointer.
 */
enum PsgStatus psg_psi_rel(const struct PsgGroup *g, const size_t *gens, size_t len, uint64_t *out);

/**
 * Sum of element orders of the cyclic group of order `n`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PsgStatus psg_psi_cyclic(uint64_t n, uint64_t *out);

/**
 * Relative sum for the order-`m` subgroup of the cyclic group of order `n`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum PsgStatus psg_psi_rel_cyclic(uint64_t n, uint64_t m, uint64_t *out);

/**
 * Runs one sweep over every subgroup of `g` and reports the counts.
 * `suite` is a `PsgSuite` value; `PSG_SUITE_THEOREM` fails with
 * `PSG_STATUS_NOT_NILPOTENT` on non-nilpotent groups.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum PsgStatus psg_verify(const struct PsgGroup *g, uint32_t suite, struct PsgVerifySummary *out);

/**
 * Message for the last failed call on this thread, or null after a
 * successful one. Valid until the next call into this library on the same
 * thread.
 */
const char *psg_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *psg_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PSIGROUP_H */
