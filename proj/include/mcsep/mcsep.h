/*
 * C interface to the mcsep library: minimal vertex separators and minimal
 * vertex cuts of small graphs, the extremal constructions, bound tables and
 * the exhaustive small-graph census.
 *
 * Conventions:
 *   - Every fallible call returns an mcsep_status. On failure the message for
 *     the calling thread is available from mcsep_last_error().
 *   - Objects returned through out-parameters are owned by the caller and
 *     released with the matching *_free function.
 *   - Vertex sets cross the boundary as 64-bit masks (bit i = vertex i).
 */
#ifndef MCSEP_MCSEP_H
#define MCSEP_MCSEP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MCSEP_BUILDING)
#    define MCSEP_API __declspec(dllexport)
#  else
#    define MCSEP_API __declspec(dllimport)
#  endif
#else
#  define MCSEP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcsep_status {
    MCSEP_OK = 0,
    MCSEP_ERR_INVALID_ARGUMENT = 1,
    MCSEP_ERR_PARSE = 2,
    MCSEP_ERR_RANGE = 3,
    MCSEP_ERR_IO = 4,
    MCSEP_ERR_CHECKPOINT = 5,
    MCSEP_ERR_INVARIANT = 6,
    MCSEP_ERR_INTERNAL = 7
} mcsep_status;

typedef struct mcsep_graph mcsep_graph;
typedef struct mcsep_family mcsep_family;

MCSEP_API const char* mcsep_version(void);
/* Message of the last failed call on this thread; "" if none. */
MCSEP_API const char* mcsep_last_error(void);
MCSEP_API const char* mcsep_status_name(mcsep_status status);
MCSEP_API void mcsep_string_free(char* text);

/* ---- graphs ------------------------------------------------------------ */

MCSEP_API mcsep_status mcsep_graph_from_graph6(const char* text, mcsep_graph** out);
/* Writes a newly allocated NUL-terminated graph6 line (no newline). */
MCSEP_API mcsep_status mcsep_graph_to_graph6(const mcsep_graph* graph, char** out);
MCSEP_API mcsep_status mcsep_graph_from_edges(int n, const int* endpoints, size_t edge_count,
                                              mcsep_graph** out);
MCSEP_API int mcsep_graph_order(const mcsep_graph* graph);
MCSEP_API uint64_t mcsep_graph_neighbors(const mcsep_graph* graph, int vertex);
MCSEP_API void mcsep_graph_free(mcsep_graph* graph);

/* ---- separators -------------------------------------------------------- */

/* 1 or 0 through *out. */
MCSEP_API mcsep_status mcsep_is_minimal_separator(const mcsep_graph* graph, int u, int v,
                                                  uint64_t set, int* out);
MCSEP_API mcsep_status mcsep_count_separators(const mcsep_graph* graph, int u, int v,
                                              uint64_t* out);
/* Minimal u,v-separators, sorted by mask. Each member is checked against the
 * full-component characterisation; a failure returns MCSEP_ERR_INVARIANT. */
MCSEP_API mcsep_status mcsep_enumerate_separators(const mcsep_graph* graph, int u, int v,
                                                  mcsep_family** out);
/* Inclusion-minimal vertex cuts, sorted by mask. */
MCSEP_API mcsep_status mcsep_enumerate_vertex_cuts(const mcsep_graph* graph, mcsep_family** out);
MCSEP_API size_t mcsep_family_size(const mcsep_family* family);
MCSEP_API uint64_t mcsep_family_member(const mcsep_family* family, size_t index);
MCSEP_API void mcsep_family_free(mcsep_family* family);

/* ---- constructions ----------------------------------------------------- */

/* Terminals are written to *u and *v when those pointers are non-null. */
MCSEP_API mcsep_status mcsep_construct_seymour(int m, mcsep_graph** out, int* u, int* v);
MCSEP_API mcsep_status mcsep_construct_glue(const mcsep_graph* a, int a_u, int a_v,
                                            const mcsep_graph* b, int b_u, int b_v,
                                            mcsep_graph** out, int* u, int* v);
MCSEP_API mcsep_status mcsep_construct_named(const char* name, int n, mcsep_graph** out);

/* ---- bounds ------------------------------------------------------------ */

/* format: "csv", "json" or "plain". census_jsonl_path may be NULL; otherwise
 * g-census records found there fill the exact_g column. */
MCSEP_API mcsep_status mcsep_bounds_table(int n_max, const char* format,
                                          const char* census_jsonl_path, char** out);
MCSEP_API double mcsep_binary_entropy(double x);

/* ---- census ------------------------------------------------------------ */

typedef struct mcsep_census_config {
    const char* kind;            /* "g" or "c" */
    int size_min;
    int size_max;
    int workers;                 /* >= 1 */
    const char* checkpoint_path; /* NULL or "" disables checkpoints */
    uint64_t checkpoint_every;   /* parent subtrees between checkpoints; 0 = default */
    const char* output_path;     /* JSON lines, appended; may be NULL */
    const char* witness_path;    /* graph6 witness lines, appended; may be NULL */
} mcsep_census_config;

/* Writes the produced records as JSON lines (elapsed time included). */
MCSEP_API mcsep_status mcsep_census_run(const mcsep_census_config* config, char** records_jsonl);

/* Writes a text report; *violated is 1 iff some g(k)^(1/k) exceeds 3^(1/3). */
MCSEP_API mcsep_status mcsep_verify_conjecture(int k_max, int workers, char** report, int* violated);

#ifdef __cplusplus
}
#endif

#endif /* MCSEP_MCSEP_H */
