#ifndef EQTREE_H
#define EQTREE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EqtreeStatus {
  EQTREE_STATUS_OK = 0,
  EQTREE_STATUS_NULL_POINTER = 1,
  EQTREE_STATUS_INVALID_GRAPH6 = 2,
  EQTREE_STATUS_INVALID_ARGUMENT = 3,
  EQTREE_STATUS_BUFFER_TOO_SMALL = 4,
  EQTREE_STATUS_PANIC = 5,
} EqtreeStatus;

/*
 Opaque graph handle.
 */
typedef struct EqtreeGraph EqtreeGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or NULL if none. The
 pointer stays valid until the next failing call on the same thread.
 */
const char *eqtree_last_error_message(void);

/*
 Parses a NUL-terminated graph6 string into a new handle.

 # Safety
 `text` must be NULL or a valid NUL-terminated string; `out` must be NULL or
 writable.
 */
enum EqtreeStatus eqtree_graph_from_graph6(const char *text, struct EqtreeGraph **out);

/*
 Releases a handle. NULL is ignored.

 # Safety
 `graph` must be NULL or a handle from `eqtree_graph_from_graph6` that has
 not been freed.
 */
void eqtree_graph_free(struct EqtreeGraph *graph);

/*
 Number of vertices, or 0 for NULL.

 # Safety
 `graph` must be NULL or a live handle.
 */
size_t eqtree_graph_order(const struct EqtreeGraph *graph);

/*
 graph6 encoding as a new string to be released with `eqtree_string_free`;
 NULL for a NULL handle.

 # Safety
 `graph` must be NULL or a live handle.
 */
char *eqtree_graph_to_graph6(const struct EqtreeGraph *graph);

/*
 # Safety
 `s` must be NULL or a string returned by this library and not yet freed.
 */
void eqtree_string_free(char *s);

/*
 Strong equitable vertex k-arboricity.

 # Safety
 `graph` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum EqtreeStatus eqtree_strong_arboricity(const struct EqtreeGraph *graph, int32_t k, size_t *out);

/*
 Equitable vertex k-arboricity: the least feasible number of classes.

 # Safety
 `graph` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum EqtreeStatus eqtree_equitable_arboricity(const struct EqtreeGraph *graph,
                                              int32_t k,
                                              size_t *out);

/*
 Searches for an equitable `(t, k)`-tree-coloring. On success `*found`
 tells whether one exists and, if so, `assignment[v]` holds the class of
 vertex `v`. `len` must be at least the graph order.

 # Safety
 `graph` must be NULL or a live handle; `assignment` must be NULL or point to
 `len` writable elements; `found` must be NULL or writable.
 */
enum EqtreeStatus eqtree_find_coloring(const struct EqtreeGraph *graph,
                                       size_t t,
                                       int32_t k,
                                       size_t *assignment,
                                       size_t len,
                                       bool *found);

/*
 Checks a coloring given as `assignment[v]` = class of `v`, classes `0..t`.

 # Safety
 `graph` must be NULL or a live handle; `assignment` must point to `len`
 readable elements; `valid` must be NULL or writable.
 */
enum EqtreeStatus eqtree_validate_coloring(const struct EqtreeGraph *graph,
                                           const size_t *assignment,
                                           size_t len,
                                           size_t t,
                                           int32_t k,
                                           bool *valid);

/*
 Whether the complement-matching characterization of strong arboricity
 `⌈n/2⌉` holds. Needs at least 2 vertices.

 # Safety
 `graph` must be NULL or a live handle; `out` must be NULL or writable.
 */
enum EqtreeStatus eqtree_predicate_va_equals_half(const struct EqtreeGraph *graph, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EQTREE_H */
