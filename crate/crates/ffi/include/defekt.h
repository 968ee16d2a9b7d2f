#ifndef DEFEKT_H
#define DEFEKT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible call.
 */
typedef enum DefektStatus {
  /**
   * The call succeeded.
   */
  DefektStatus_Ok = 0,
  /**
   * A required pointer argument was null.
   */
  DefektStatus_NullPointer = 1,
  /**
   * The input was not a valid graph6 string.
   */
  DefektStatus_InvalidGraph6 = 2,
  /**
   * A numeric argument was outside the supported range.
   */
  DefektStatus_OutOfRange = 3,
} DefektStatus;

/**
 * Opaque graph handle.
 */
typedef struct DefektGraph DefektGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse a graph6 string into a new graph handle.
 *
 * # Safety
 * `text` must be a valid NUL-terminated C string and `out` a valid pointer.
 * On `Ok` the handle written to `out` must later be released with
 * `defekt_graph_free`.
 */
enum DefektStatus defekt_graph_parse_g6(const char *text, struct DefektGraph **out);

/**
 * Release a graph handle. Null is a no-op.
 *
 * # Safety
 * `g` must be null or a handle produced by this library that has not been
 * freed before.
 */
void defekt_graph_free(struct DefektGraph *g);

/**
 * Number of vertices.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum DefektStatus defekt_graph_order(const struct DefektGraph *g, uint32_t *out);

/**
 * Number of edges.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum DefektStatus defekt_graph_edge_count(const struct DefektGraph *g, uint32_t *out);

/**
 * Whether the graph has no triangle; writes 0 or 1.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum DefektStatus defekt_graph_is_triangle_free(const struct DefektGraph *g, uint8_t *out);

/**
 * Whether the graph is planar; writes 0 or 1.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum DefektStatus defekt_graph_is_planar(const struct DefektGraph *g, uint8_t *out);

/**
 * The k-defective chromatic number.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
enum DefektStatus defekt_graph_chi(const struct DefektGraph *g, uint32_t k, uint32_t *out);

/**
 * The graph6 encoding of the graph as given.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer; the string written
 * to `out` must be released with `defekt_string_free`.
 */
enum DefektStatus defekt_graph_emit_g6(const struct DefektGraph *g, char **out);

/**
 * The canonical graph6 form, equal for exactly the isomorphic graphs.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer; the string written
 * to `out` must be released with `defekt_string_free`.
 */
enum DefektStatus defekt_graph_canonical_g6(const struct DefektGraph *g, char **out);

/**
 * Release a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a string produced by this library that has not been
 * freed before.
 */
void defekt_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DEFEKT_H */
