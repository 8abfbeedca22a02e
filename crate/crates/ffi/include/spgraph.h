#ifndef SPGRAPH_H
#define SPGRAPH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SpgStatus {
  SPG_STATUS_OK = 0,
  SPG_STATUS_NULL_POINTER = 1,
  SPG_STATUS_INVALID_UTF8 = 2,
  SPG_STATUS_PARSE = 3,
  SPG_STATUS_INVALID_GRAPH = 4,
  SPG_STATUS_INVALID_ARGUMENT = 5,
  SPG_STATUS_NO_GEODESIC = 6,
  SPG_STATUS_LIMIT_EXCEEDED = 7,
  /*
   A check ran and failed; the report carries the witness.
   */
  SPG_STATUS_CHECK_FAILED = 8,
  SPG_STATUS_PANIC = 99,
} SpgStatus;

/*
 A shortest path graph with difference indices on its edges.
 */
typedef struct SpgGraph SpgGraph;

/*
 A base graph with its endpoints `a` and `b`.
 */
typedef struct SpgInstance SpgInstance;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or null. The pointer is
 valid until the next `spg_*` call on the same thread.
 */
const char *spg_last_error(void);

/*
 # Safety
 `s` must be null or a string returned by this library and not yet freed.
 */
void spg_string_free(char *s);

/*
 Parses a graph (JSON object `{"vertices":[..],"edges":[[u,v],..]}`, or
 the edge-list text format when `json` is false) with endpoints `a`, `b`.

 # Safety
 `graph`, `a`, `b` must be nul-terminated strings; `out` must be writable.
 */
enum SpgStatus spg_instance_parse(const char *graph,
                                  bool json,
                                  const char *a,
                                  const char *b,
                                  struct SpgInstance **out);

/*
 # Safety
 `p` must be null or a handle from [`spg_instance_parse`] not yet freed.
 */
void spg_instance_free(struct SpgInstance *p);

/*
 `d(a, b)`; `SPG_STATUS_NO_GEODESIC` when `a` and `b` are disconnected.

 # Safety
 `inst` must be a live handle; `out` must be writable.
 */
enum SpgStatus spg_instance_distance(const struct SpgInstance *inst, size_t *out);

/*
 Builds `S(G, a, b)`, refusing to materialize more than `limit`
 geodesics.

 # Safety
 `inst` must be a live handle; `out` must be writable.
 */
enum SpgStatus spg_build(const struct SpgInstance *inst, uint64_t limit, struct SpgGraph **out);

/*
 Reads an SpGraph from its JSON form. With an empty `geodesics` list the
 edges and indices are taken as given, which lets hand-built graphs reach
 the checkers.

 # Safety
 `json` must be a nul-terminated string; `out` must be writable.
 */
enum SpgStatus spg_graph_parse(const char *json, struct SpgGraph **out);

/*
 # Safety
 `p` must be null or a handle from [`spg_build`] or [`spg_graph_parse`]
 not yet freed.
 */
void spg_graph_free(struct SpgGraph *p);

/*
 # Safety
 `h` must be a live handle; the out pointers must be writable.
 */
enum SpgStatus spg_graph_counts(const struct SpgGraph *h, size_t *vertices, size_t *edges);

/*
 The `k`-th edge `(u, w)` with `u < w` in ascending order, and its
 difference index.

 # Safety
 `h` must be a live handle; the out pointers must be writable.
 */
enum SpgStatus spg_graph_edge(const struct SpgGraph *h,
                              size_t k,
                              size_t *u,
                              size_t *w,
                              size_t *index);

/*
 Serializes as JSON (`dot` false) or Graphviz DOT (`dot` true).

 # Safety
 `h` must be a live handle; `out` must be writable.
 */
enum SpgStatus spg_graph_export(const struct SpgGraph *h, bool dot, char **out);

/*
 Runs the named checker (`p3_c4`, `no_induced_c5`, `claw_in_c4`,
 `odd_cycle_c4`, `girth5_classification`, `complete_iff_same_index`) and
 writes its JSON report to `report`. Returns `SPG_STATUS_CHECK_FAILED`
 when the check fails.

 # Safety
 `h` must be a live handle, `name` a nul-terminated string and `report`
 writable.
 */
enum SpgStatus spg_check(const struct SpgGraph *h, const char *name, char **report);

/*
 The lattice point of a grid geodesic given as a word (`"32121231"`),
 formatted `(3,2,1,3,1,3,0)`.

 # Safety
 `dims` must point to `m` readable values, `word` must be a
 nul-terminated string and `out` writable.
 */
enum SpgStatus spg_grid_phi(const size_t *dims, size_t m, const char *word, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SPGRAPH_H */
