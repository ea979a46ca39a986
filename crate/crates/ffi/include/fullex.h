#ifndef FULLEX_H
#define FULLEX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum FullexStatus {
  FULLEX_STATUS_OK = 0,
  FULLEX_STATUS_NULL_POINTER = 1,
  /**
   * Malformed bytes, bad rotation system or out-of-range argument.
   */
  FULLEX_STATUS_INVALID_INPUT = 2,
  /**
   * A cubic plane graph, but not a (4,5,6)-fullerene.
   */
  FULLEX_STATUS_NOT_FULLERENE = 3,
  FULLEX_STATUS_NO_PERFECT_MATCHING = 4,
  /**
   * The caller's buffer is too small; the needed length was written.
   */
  FULLEX_STATUS_BUFFER_TOO_SMALL = 5,
  /**
   * The computation exceeded a built-in limit.
   */
  FULLEX_STATUS_LIMIT_EXCEEDED = 6,
  /**
   * A panic was caught at the boundary.
   */
  FULLEX_STATUS_INTERNAL = 7,
} FullexStatus;

/**
 * Opaque graph handle.
 */
typedef struct FullexGraph FullexGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static, NUL-terminated description of a status code.
 */
const char *fullex_status_message(enum FullexStatus status);

/**
 * Library version, NUL-terminated.
 */
const char *fullex_version(void);

/**
 * Decodes the first graph of a planar_code buffer (header included).
 *
 * # Safety
 * `bytes` points to `len` readable bytes; `out` is writable.
 */
enum FullexStatus fullex_graph_from_planar_code(const uint8_t *bytes,
                                                size_t len,
                                                struct FullexGraph **out);

/**
 * Builds a graph from `3 * n` neighbour ids: vertex `v`'s clockwise
 * rotation is `rot[3v], rot[3v+1], rot[3v+2]`.
 *
 * # Safety
 * `rot` points to `3 * n` readable values; `out` is writable.
 */
enum FullexStatus fullex_graph_from_rotation(size_t n, const size_t *rot, struct FullexGraph **out);

/**
 * The tube with `layers >= 1` hexagon layers.
 *
 * # Safety
 * `out` is writable.
 */
enum FullexStatus fullex_tube_new(size_t layers, struct FullexGraph **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `g` is null or a handle not yet freed.
 */
void fullex_graph_free(struct FullexGraph *g);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `g` is null or a live handle.
 */
size_t fullex_graph_order(const struct FullexGraph *g);

/**
 * Face counts by length; `NotFullerene` if other face lengths occur.
 *
 * # Safety
 * `g` is a live handle; the out-pointers are writable.
 */
enum FullexStatus fullex_face_counts(const struct FullexGraph *g,
                                     size_t *p4,
                                     size_t *p5,
                                     size_t *p6);

/**
 * Decides k-extendability for `1 <= k <= 3`. On failure, if `witness` is
 * not null, the first non-extendable matching is written there as `2k`
 * vertex ids (edge endpoints in order).
 *
 * # Safety
 * `g` is a live handle; `extendable` is writable; `witness` is null or
 * has room for `2k` values.
 */
enum FullexStatus fullex_is_k_extendable(const struct FullexGraph *g,
                                         size_t k,
                                         bool *extendable,
                                         size_t *witness);

/**
 * Largest `k <= 3` for which the graph is k-extendable.
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum FullexStatus fullex_extendability(const struct FullexGraph *g, size_t *out);

/**
 * Anti-Kekulé number.
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum FullexStatus fullex_anti_kekule_number(const struct FullexGraph *g, size_t *out);

/**
 * Number of perfect matchings (at most 64 vertices).
 *
 * # Safety
 * `g` is a live handle; `out` is writable.
 */
enum FullexStatus fullex_count_perfect_matchings(const struct FullexGraph *g, uint64_t *out);

/**
 * Number of tube layers if the graph is a tube, else 0.
 *
 * # Safety
 * `g` is a live handle; `layers` is writable.
 */
enum FullexStatus fullex_tube_layers(const struct FullexGraph *g, size_t *layers);

/**
 * Canonical code (equal for isomorphic graphs). Writes the length to
 * `len`; copies the code into `buf` if `cap` suffices, otherwise returns
 * `BufferTooSmall`. Pass `buf = NULL, cap = 0` to query the length.
 *
 * # Safety
 * `g` is a live handle; `len` is writable; `buf` is null or has room for
 * `cap` bytes.
 */
enum FullexStatus fullex_canonical_code(const struct FullexGraph *g,
                                        uint8_t *buf,
                                        size_t cap,
                                        size_t *len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FULLEX_H */
