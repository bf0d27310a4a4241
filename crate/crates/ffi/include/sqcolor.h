/* SPDX-License-Identifier: Apache-2.0 */
/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef SQCOLOR_H
#define SQCOLOR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes.
 */
typedef enum SqStatus {
  SQ_STATUS_OK = 0,
  SQ_STATUS_NULL_POINTER = 1,
  SQ_STATUS_INVALID_ARGUMENT = 2,
  SQ_STATUS_PARSE_ERROR = 3,
  SQ_STATUS_UNKNOWN_CONSTRUCTION = 4,
  /*
   The search stopped early; out-parameters hold valid bounds.
   */
  SQ_STATUS_BUDGET_EXHAUSTED = 5,
  /*
   A value does not fit the output type.
   */
  SQ_STATUS_OVERFLOW = 6,
  SQ_STATUS_INTERNAL = 7,
} SqStatus;

/*
 Opaque graph handle.
 */
typedef struct SqGraph SqGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread; empty after success.
 Valid until the next call into this library on the same thread.
 */
const char *sq_last_error(void);

/*
 Static name of a status code.
 */
const char *sq_status_name(enum SqStatus status);

/*
 Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 `edges` (`2 * edge_count` entries). `edges` may be null when
 `edge_count` is 0.
 */
enum SqStatus sq_graph_new(size_t n, const size_t *edges, size_t edge_count, struct SqGraph **out);

/*
 Parses the edge-list or DIMACS text format.
 */
enum SqStatus sq_graph_parse(const char *text, struct SqGraph **out);

/*
 One of `petersen`, `figure2`, `figure3_full`, `figure3_reduced`,
 `path(N)`, `cycle(N)`.
 */
enum SqStatus sq_graph_named(const char *name, struct SqGraph **out);

/*
 `K_n` with edges blown up into `K_{2,t}`; needs `n >= 4`, `t >= 2`.
 */
enum SqStatus sq_graph_g_family(size_t n, size_t t, struct SqGraph **out);

/*
 Seeded random 2-degenerate graph; needs `nv >= 3`, `degree_cap >= 2`.
 */
enum SqStatus sq_graph_random_two_degenerate(size_t nv,
                                             size_t degree_cap,
                                             uint64_t seed,
                                             struct SqGraph **out);

/*
 Releases a handle; null is ignored.
 */
void sq_graph_free(struct SqGraph *g);

/*
 Writes the vertex count, edge count and maximum degree. Any output
 pointer may be null.
 */
enum SqStatus sq_graph_stats(const struct SqGraph *g,
                             size_t *vertices,
                             size_t *edges,
                             size_t *max_degree);

/*
 New handle holding the square of `g`.
 */
enum SqStatus sq_graph_square(const struct SqGraph *g, struct SqGraph **out);

/*
 Exact maximum average degree as a reduced fraction.
 */
enum SqStatus sq_mad(const struct SqGraph *g, int64_t *numerator, int64_t *denominator);

/*
 Degeneracy of `g`.
 */
enum SqStatus sq_degeneracy(const struct SqGraph *g, size_t *out);

/*
 Colours used by first-fit on the square along its degeneracy ordering.
 `colors` may be null; otherwise it must have room for one entry per
 vertex and receives the 1-based colours.
 */
enum SqStatus sq_square_color(const struct SqGraph *g, size_t *colors_used, uint32_t *colors);

/*
 Chromatic number of `g` (pass a squared handle for `χ(G²)`).
 `max_nodes = 0` means no limit. When the search stops early the status
 is `BudgetExhausted` and `lower <= χ <= upper`.
 */
enum SqStatus sq_exact_chromatic(const struct SqGraph *g,
                                 uint64_t max_nodes,
                                 size_t *lower,
                                 size_t *upper);

/*
 Size of a maximum clique; `BudgetExhausted` means only a lower bound.
 */
enum SqStatus sq_max_clique(const struct SqGraph *g, uint64_t max_nodes, size_t *size);

/*
 Edge-list text of `g`. Free with `sq_string_free`.
 */
enum SqStatus sq_graph_to_edge_list(const struct SqGraph *g, char **out);

/*
 JSON summary of `g` (the `verify` report). `max_nodes` limits the
 clique search in the square; 0 means no limit. Free with
 `sq_string_free`.
 */
enum SqStatus sq_verify_json(const struct SqGraph *g, uint64_t max_nodes, char **out);

/*
 Releases a string returned by this library; null is ignored.
 */
void sq_string_free(char *s);

/*
 Colour bound for `G²` when `mad(G) < 2k`.
 */
uint64_t sq_ghost_chromatic_bound(uint64_t k, uint64_t max_degree);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SQCOLOR_H */
