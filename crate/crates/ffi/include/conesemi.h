#ifndef CONESEMI_H
#define CONESEMI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes. `CS_STATUS_OK` is zero; library errors map one to one onto
 * the remaining codes.
 */
typedef enum CsStatus {
  CS_STATUS_OK = 0,
  CS_STATUS_NULL_POINTER,
  CS_STATUS_INVALID_ARGUMENT,
  CS_STATUS_PANIC,
  CS_STATUS_DIMENSION_MISMATCH,
  CS_STATUS_UNSUPPORTED_DIMENSION,
  CS_STATUS_INVALID_CONE,
  CS_STATUS_CAPACITY_EXCEEDED,
  CS_STATUS_GAP_OUTSIDE_CONE,
  CS_STATUS_ZERO_GAP,
  CS_STATUS_NOT_CLOSED,
  CS_STATUS_EMPTY_GAP_SET,
  CS_STATUS_NOT_A_MEMBER,
  CS_STATUS_ZERO_SHIFT,
  CS_STATUS_INVALID_RAY,
  CS_STATUS_INVALID_NUMERICAL,
  CS_STATUS_GENERATOR_OUTSIDE_CONE,
  CS_STATUS_NO_GENERATORS,
  CS_STATUS_NOT_COFINITE,
  CS_STATUS_INFINITE_GAP_FAMILY,
  CS_STATUS_CONE_MISMATCH,
  CS_STATUS_BUDGET_EXCEEDED,
  CS_STATUS_POINT_OUTSIDE_CONE,
  CS_STATUS_ZERO_POINT,
  CS_STATUS_DEGENERATE_PATTERN,
  CS_STATUS_CAP_TOO_SMALL,
  CS_STATUS_PARSE,
} CsStatus;

/**
 * Partial order selector for Frobenius sets and Wilf counts.
 */
typedef enum CsOrder {
  CS_ORDER_CONE = 0,
  CS_ORDER_INDUCED = 1,
} CsOrder;

/**
 * Opaque semigroup handle.
 */
typedef struct CsSemigroup CsSemigroup;

/**
 * `len` points of dimension `dim`, coordinates stored row by row.
 */
typedef struct CsPointList {
  int64_t *coords;
  size_t len;
  size_t dim;
} CsPointList;

typedef struct CsWilfReport {
  uint64_t e;
  uint64_t n;
  uint64_t c;
  uint64_t p;
  int64_t margin;
  bool holds;
} CsWilfReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Semigroup over the full cone N^p (1 <= p <= 3) with `gap_count` gaps
 * given as `gap_count * p` coordinates.
 */
enum CsStatus cs_semigroup_new_full(size_t p,
                                    const int64_t *gaps,
                                    size_t gap_count,
                                    struct CsSemigroup **out);

/**
 * Semigroup over the planar cone spanned by `(r1x, r1y)` and `(r2x, r2y)`.
 */
enum CsStatus cs_semigroup_new_rays2d(int64_t r1x,
                                      int64_t r1y,
                                      int64_t r2x,
                                      int64_t r2y,
                                      const int64_t *gaps,
                                      size_t gap_count,
                                      struct CsSemigroup **out);

/**
 * Parses `{"cone": ..., "gaps": [...]}`.
 */
enum CsStatus cs_semigroup_from_json(const char *json, struct CsSemigroup **out);

/**
 * Expands `{"cone": ..., "generators": [...]}` into its gap set.
 */
enum CsStatus cs_semigroup_from_generators_json(const char *json, struct CsSemigroup **out);

/**
 * Releases a handle; null is ignored.
 */
void cs_semigroup_free(struct CsSemigroup *s);

enum CsStatus cs_semigroup_genus(const struct CsSemigroup *s, size_t *out);

enum CsStatus cs_semigroup_dim(const struct CsSemigroup *s, size_t *out);

/**
 * Membership of the point with `dim` coordinates at `coords`.
 */
enum CsStatus cs_semigroup_is_member(const struct CsSemigroup *s,
                                     const int64_t *coords,
                                     size_t dim,
                                     bool *out);

enum CsStatus cs_semigroup_gaps(const struct CsSemigroup *s, struct CsPointList *out);

enum CsStatus cs_semigroup_minimal_generators(const struct CsSemigroup *s, struct CsPointList *out);

enum CsStatus cs_semigroup_frobenius_set(const struct CsSemigroup *s,
                                         enum CsOrder order,
                                         struct CsPointList *out);

enum CsStatus cs_semigroup_pseudo_frobenius(const struct CsSemigroup *s, struct CsPointList *out);

enum CsStatus cs_semigroup_frobenius_elements(const struct CsSemigroup *s, struct CsPointList *out);

/**
 * Apéry set with respect to the element `b` (`dim` coordinates).
 */
enum CsStatus cs_semigroup_apery(const struct CsSemigroup *s,
                                 const int64_t *b,
                                 size_t dim,
                                 struct CsPointList *out);

/**
 * Quasi-elasticity as a reduced fraction.
 */
enum CsStatus cs_semigroup_quasi_elasticity(const struct CsSemigroup *s,
                                            int64_t *numer,
                                            int64_t *denom);

/**
 * Excluded weights of the weight set, written to `out` as a list of
 * one-dimensional points.
 */
enum CsStatus cs_semigroup_weight_set_excluded(const struct CsSemigroup *s,
                                               struct CsPointList *out);

enum CsStatus cs_semigroup_wilf_report(const struct CsSemigroup *s,
                                       enum CsOrder order,
                                       struct CsWilfReport *out);

/**
 * Semigroup JSON; free the string with `cs_string_free`.
 */
enum CsStatus cs_semigroup_to_json(const struct CsSemigroup *s, char **out);

/**
 * Runs the Wilf sweep over the cone given as JSON and returns the report
 * JSON. `jobs == 0` uses the default thread count.
 */
enum CsStatus cs_wilf_sweep_json(const char *cone_json,
                                 size_t max_genus,
                                 size_t jobs,
                                 enum CsOrder order,
                                 char **out);

void cs_point_list_free(struct CsPointList *list);

void cs_string_free(char *s);

/**
 * Message for the last failing call on this thread (empty after a
 * success). The pointer stays valid until the next call on this thread.
 */
const char *cs_last_error_message(void);

/**
 * Static name of a status code.
 */
const char *cs_status_name(enum CsStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONESEMI_H */
