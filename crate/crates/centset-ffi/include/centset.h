/* C interface to the centset finite-group library. */

#ifndef CENTSET_H
#define CENTSET_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum CentsetStatus {
  CENTSET_STATUS_OK = 0,
  CENTSET_STATUS_NULL_POINTER = 1,
  CENTSET_STATUS_INVALID_UTF8 = 2,
  CENTSET_STATUS_BAD_PARAMS = 3,
  CENTSET_STATUS_ORDER_CAP_EXCEEDED = 4,
  CENTSET_STATUS_INVALID_GROUP_FILE = 5,
  CENTSET_STATUS_NOT_NORMAL = 6,
  CENTSET_STATUS_SEARCH_BUDGET_EXCEEDED = 7,
  CENTSET_STATUS_PANIC = 8,
  CENTSET_STATUS_OTHER = 9,
} CentsetStatus;

/**
 * Opaque handle to an immutable finite group.
 */
typedef struct CentsetGroup CentsetGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *centset_last_error_message(void);

/**
 * Frees a string returned by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must be NULL or a pointer previously returned by a `*_json`
 * function of this library, not yet freed.
 */
void centset_string_free(char *s);

/**
 * Parses a `centset-group-v1` JSON document (permutation, table or family
 * kind). `order_cap` of 0 selects the default (2048).
 *
 * # Safety
 * `json` must be a valid NUL-terminated string; `out` must be non-NULL.
 */
enum CentsetStatus centset_group_from_json(const char *json,
                                           uint32_t order_cap,
                                           struct CentsetGroup **out);

/**
 * Builds a named family, e.g. name `"dihedral"`, params `{"n":8}`.
 *
 * # Safety
 * `name` and `params_json` must be valid NUL-terminated strings; `out`
 * must be non-NULL.
 */
enum CentsetStatus centset_group_from_family(const char *name,
                                             const char *params_json,
                                             uint32_t order_cap,
                                             struct CentsetGroup **out);

/**
 * Releases a group handle. NULL is a no-op.
 *
 * # Safety
 * `g` must be NULL or a handle from a constructor, not yet freed.
 */
void centset_group_free(struct CentsetGroup *g);

/**
 * # Safety
 * `g` must be a valid handle.
 */
uint32_t centset_group_order(const struct CentsetGroup *g);

/**
 * Table lookup `a * b`; element 0 is the identity. Out-of-range arguments
 * return `UINT16_MAX`.
 *
 * # Safety
 * `g` must be a valid handle.
 */
uint16_t centset_group_mul(const struct CentsetGroup *g, uint16_t a, uint16_t b);

/**
 * Number of distinct element centralizers |Cent(G)|.
 *
 * # Safety
 * `g` must be a valid handle; `out` must be non-NULL.
 */
enum CentsetStatus centset_cent_count(const struct CentsetGroup *g, uint32_t *out);

/**
 * Whether |Cent(G)| = |G'| + 2 (1 = yes, 0 = no).
 *
 * # Safety
 * `g` must be a valid handle; `out` must be non-NULL.
 */
enum CentsetStatus centset_is_cg(const struct CentsetGroup *g, int32_t *out);

/**
 * Full analysis report as a JSON string (same schema as `centset analyze
 * --json`). Free the result with [`centset_string_free`].
 *
 * # Safety
 * `g` must be a valid handle; `out` must be non-NULL.
 */
enum CentsetStatus centset_analyze_json(const struct CentsetGroup *g, char **out);

/**
 * The group serialized in `centset-group-v1` table form.
 *
 * # Safety
 * `g` must be a valid handle; `out` must be non-NULL.
 */
enum CentsetStatus centset_group_to_table_json(const struct CentsetGroup *g, char **out);

/**
 * Frobenius decomposition as JSON, or the string `null` when the group is
 * not Frobenius.
 *
 * # Safety
 * `g` must be a valid handle; `out` must be non-NULL.
 */
enum CentsetStatus centset_frobenius_json(const struct CentsetGroup *g, char **out);

/**
 * Isoclinism test. `verdict` is set to 1 (isoclinic) or 0 (not);
 * `budget` of 0 selects the default search budget.
 *
 * # Safety
 * `a` and `b` must be valid handles; `verdict` must be non-NULL.
 */
enum CentsetStatus centset_are_isoclinic(const struct CentsetGroup *a,
                                         const struct CentsetGroup *b,
                                         uint64_t budget,
                                         int32_t *verdict);

/**
 * Runs the claims registry (optionally filtered by an id glob; NULL means
 * all claims) and returns the JSON report. `exit_code` follows the CLI
 * contract: 0 ok, 2 some claim refuted, 1 error.
 *
 * # Safety
 * `filter` must be NULL or a valid NUL-terminated string; `out` and
 * `exit_code` must be non-NULL.
 */
enum CentsetStatus centset_claims_run_json(const char *filter,
                                           uint32_t jobs,
                                           char **out,
                                           int32_t *exit_code);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CENTSET_H */
