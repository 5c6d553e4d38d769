#ifndef CUBECRUX_H
#define CUBECRUX_H

/* Generated by cbindgen. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#define CC_OK 0

#define CC_ERR_NULL 1

#define CC_ERR_UTF8 2

#define CC_ERR_PANIC 3

/**
 * A validated chart.
 */
typedef struct CcChart CcChart;

/**
 * An exact rational `num / den` with `den > 0`.
 */
typedef struct CcRational {
  int64_t num;
  int64_t den;
} CcRational;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static, NUL-terminated crate version.
 */
const char *cc_version(void);

/**
 * Message of the last failed call on this thread, empty after a success.
 * Valid until the next call on the same thread.
 */
const char *cc_last_error_message(void);

/**
 * Parses and validates a chart from JSON text.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a writable pointer.
 */
int32_t cc_chart_from_json(const char *json, struct CcChart **out);

/**
 * Releases a chart. Null is ignored.
 *
 * # Safety
 * `chart` must come from `cc_chart_from_json` and not be freed twice.
 */
void cc_chart_free(struct CcChart *chart);

/**
 * Canonical JSON of the chart; release it with `cc_string_free`.
 *
 * # Safety
 * `chart` must be a live handle and `out` a writable pointer.
 */
int32_t cc_chart_to_json(const struct CcChart *chart, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void cc_string_free(char *s);

/**
 * # Safety
 * `chart` must be a live handle and `out` a writable pointer.
 */
int32_t cc_chart_num_vertices(const struct CcChart *chart, size_t *out);

/**
 * # Safety
 * `chart` must be a live handle and `out` a writable pointer.
 */
int32_t cc_chart_num_walls(const struct CcChart *chart, size_t *out);

/**
 * Index of the vertex with the given name.
 *
 * # Safety
 * `chart` must be a live handle, `name` NUL-terminated, `out` writable.
 */
int32_t cc_chart_vertex_index(const struct CcChart *chart, const char *name, size_t *out);

/**
 * Weighted distance.
 *
 * # Safety
 * `chart` must be a live handle and `out` a writable pointer.
 */
int32_t cc_chart_distance(const struct CcChart *chart, size_t x, size_t y, struct CcRational *out);

/**
 * Median vertex of a triple.
 *
 * # Safety
 * `chart` must be a live handle and `out` a writable pointer.
 */
int32_t cc_chart_median(const struct CcChart *chart, size_t x, size_t y, size_t z, size_t *out);

/**
 * Gromov product `(x · y)_v`.
 *
 * # Safety
 * `chart` must be a live handle and `out` a writable pointer.
 */
int32_t cc_chart_gromov_product(const struct CcChart *chart,
                                size_t v,
                                size_t x,
                                size_t y,
                                struct CcRational *out);

/**
 * Cross ratio of four vertices.
 *
 * # Safety
 * `chart` must be a live handle and `out` a writable pointer.
 */
int32_t cc_chart_cross_ratio(const struct CcChart *chart,
                             size_t x,
                             size_t y,
                             size_t z,
                             size_t w,
                             struct CcRational *out);

/**
 * Whether `x` and `y` are opposite at their median with `z`.
 *
 * # Safety
 * `chart` must be a live handle and `out` a writable pointer.
 */
int32_t cc_chart_is_opposite(const struct CcChart *chart, size_t x, size_t y, size_t z, bool *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CUBECRUX_H */
