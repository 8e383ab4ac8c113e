/* ordeg - construction and certification of low-diameter graphs.
 *
 * C API over the C++ core. All functions returning ordeg_status set a
 * thread-local message retrievable with ordeg_last_error() on failure.
 * Handles are opaque; free graphs with ordeg_graph_free, plan lists with
 * ordeg_plan_list_free, emitted strings with ordeg_string_free.
 */

#ifndef ORDEG_H
#define ORDEG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ORDEG_API __declspec(dllexport)
#else
#define ORDEG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ordeg_status {
    ORDEG_OK = 0,
    ORDEG_E_INVALID = 1, /* bad argument or precondition */
    ORDEG_E_DOMAIN = 2,  /* query undefined for this graph (e.g. ASPL, disconnected) */
    ORDEG_E_PARSE = 3,   /* malformed edge list; message names the line */
    ORDEG_E_LIMIT = 4,   /* size cap exceeded */
    ORDEG_E_NOMEM = 5,
    ORDEG_E_BUFFER = 6   /* caller buffer too small */
} ordeg_status;

typedef struct ordeg_graph ordeg_graph;
typedef struct ordeg_plan_list ordeg_plan_list;

ORDEG_API const char* ordeg_version(void);

/* Message for the most recent failing call on this thread; empty string if
 * none. The pointer stays valid until the next failing call. */
ORDEG_API const char* ordeg_last_error(void);

/* ---- graph lifecycle -------------------------------------------------- */

/* endpoints holds edge_count pairs (u0,v0,u1,v1,...). Duplicate edges are
 * collapsed; self-loops and out-of-range ids are errors. */
ORDEG_API ordeg_status ordeg_graph_build(uint64_t order, const uint32_t* endpoints, size_t edge_count,
                                         ordeg_graph** out);
ORDEG_API void ordeg_graph_free(ordeg_graph* g);

ORDEG_API uint32_t ordeg_graph_order(const ordeg_graph* g);
ORDEG_API uint64_t ordeg_graph_edge_count(const ordeg_graph* g);
ORDEG_API ordeg_status ordeg_graph_degree(const ordeg_graph* g, uint32_t v, uint32_t* out);
/* Borrowed pointer into the graph's sorted neighbor list; valid while g lives. */
ORDEG_API ordeg_status ordeg_graph_neighbors(const ordeg_graph* g, uint32_t v, const uint32_t** out_ptr,
                                             uint32_t* out_len);

/* ---- generators and constructions ------------------------------------- */

/* Families and parameter counts:
 *   petersen (0)   hypercube n (1)  torus m n (2)  debruijn t n (2)
 *   complete n (1) cycle n (1)      g8 (0)         brown-f q (1)
 *   brown-z n (1)  kg8 n (1)        kkg8 a b (2)
 */
ORDEG_API ordeg_status ordeg_gen(const char* family, const uint64_t* params, size_t nparams, ordeg_graph** out);

typedef struct ordeg_prediction {
    uint64_t order;
    uint64_t max_degree;
    int has_diameter;
    uint32_t diameter;
    int degree_is_bound;   /* max_degree is an upper bound, not exact */
    int diameter_is_bound; /* diameter is an upper bound, not exact */
} ordeg_prediction;

/* Closed-form order/degree/diameter the family promises for these
 * parameters, without building the graph. */
ORDEG_API ordeg_status ordeg_predict(const char* family, const uint64_t* params, size_t nparams,
                                     ordeg_prediction* out);

/* Adds copies new vertices, each adjacent to the whole neighborhood of
 * target; clique != 0 additionally joins target and all copies pairwise.
 * target < 0 selects the lowest-id minimum-degree vertex. Keeps diameter
 * at most 2 when the base has diameter at most 2. */
ORDEG_API ordeg_status ordeg_duplicate_vertices(const ordeg_graph* base, int64_t target, uint32_t copies,
                                                int clique, ordeg_graph** out);

/* ---- metrics ----------------------------------------------------------- */

typedef struct ordeg_metrics {
    uint64_t order;
    uint64_t edge_count;
    uint32_t min_degree;
    uint32_t max_degree;
    int is_regular;
    int is_connected;
    int has_diameter; /* absent when disconnected */
    uint32_t diameter;
    int has_girth; /* absent when acyclic */
    uint32_t girth;
    int has_aspl; /* absent when disconnected or order < 2 */
    uint64_t aspl_num; /* sum of distances over ordered pairs */
    uint64_t aspl_den; /* order * (order - 1) */
} ordeg_metrics;

ORDEG_API ordeg_status ordeg_compute_metrics(const ordeg_graph* g, ordeg_metrics* out);

/* out must hold order entries; unreachable vertices get -1. */
ORDEG_API ordeg_status ordeg_bfs_distances(const ordeg_graph* g, uint32_t source, int32_t* out);

/* Reference all-pairs distances by exhaustive relaxation, independent of the
 * BFS path. out must hold order*order entries, row-major, -1 unreachable.
 * cap = 0 means the default cap of 512; larger orders are refused. */
ORDEG_API ordeg_status ordeg_oracle_all_pairs(const ordeg_graph* g, uint32_t cap, int32_t* out);

/* ---- bounds and planning ----------------------------------------------- */

/* Decimal string of 1 + degree * sum_{k<diameter} (degree-1)^k. */
ORDEG_API ordeg_status ordeg_moore_bound(uint32_t degree, uint32_t diameter, char* buf, size_t buflen);

/* order as a percentage of the bound, two decimals, round half up ("52.78"). */
ORDEG_API ordeg_status ordeg_moore_ratio_pct(uint64_t order, uint32_t degree, uint32_t diameter, char* buf,
                                             size_t buflen);

ORDEG_API ordeg_status ordeg_aspl_lower_bound(uint64_t order, uint64_t degree, uint64_t* num, uint64_t* den);

enum {
    ORDEG_OPTIMUM_KNOWN = 0,
    ORDEG_OPTIMUM_OPEN = 1,   /* value holds the undecided ceiling */
    ORDEG_OPTIMUM_UNKNOWN = 2 /* value is 0 */
};
ORDEG_API ordeg_status ordeg_known_optimum(uint32_t degree, uint32_t diameter, int* kind, uint64_t* value);

typedef struct ordeg_bound_report {
    char moore[704];
    int optimum_kind;
    uint64_t optimum_value;
    int has_brown;
    char brown[704];
    int has_de_bruijn;
    char de_bruijn[704];
    int has_power_of_two;
    char power_of_two[704];
} ordeg_bound_report;

ORDEG_API ordeg_status ordeg_construction_bounds(uint32_t degree, uint32_t diameter, ordeg_bound_report* out);

/* Ranked construction candidates for exactly this order within the degree
 * budget, targeting diameter 2 (diameter 1 via complete graphs). */
ORDEG_API ordeg_status ordeg_plan(uint64_t order, uint64_t degree, ordeg_plan_list** out);
ORDEG_API void ordeg_plan_list_free(ordeg_plan_list* plans);
ORDEG_API size_t ordeg_plan_count(const ordeg_plan_list* plans);

typedef struct ordeg_plan_info {
    char family[32];
    char params[64];
    uint64_t order;
    uint64_t degree; /* predicted upper bound */
    uint32_t diameter;
} ordeg_plan_info;

ORDEG_API ordeg_status ordeg_plan_get(const ordeg_plan_list* plans, size_t index, ordeg_plan_info* out);

/* Builds the planned graph, measures it, and compares against the
 * prediction. pass = 1 when measured order equals the plan, max degree is
 * within budget, and the diameter matches exactly. metrics may be NULL. */
ORDEG_API ordeg_status ordeg_plan_realize(const ordeg_plan_list* plans, size_t index, ordeg_graph** out_graph,
                                          ordeg_metrics* out_metrics, int* out_pass);

typedef struct ordeg_table_row {
    uint64_t degree;
    uint64_t order;
    char family[32];
    char params[64];
    char moore[64];
    char moore_ratio_pct[16];
} ordeg_table_row;

/* Best planner-achievable diameter-2 order per degree. rows must hold
 * max_degree - 1 entries (degrees 2..max_degree); count is written out. */
ORDEG_API ordeg_status ordeg_best_order_table(uint64_t max_degree, ordeg_table_row* rows, size_t* out_count);

/* ---- product machinery verification ------------------------------------ */

typedef struct ordeg_prop1_report {
    int ab_partitions;
    int cd_partitions;
    int c_adjacent_d;
    int a_covers_c;
    int b_covers_d;
    int all_pass;
} ordeg_prop1_report;

/* Exhaustive check of the subset machinery behind the kkg8 diameter-2
 * argument. */
ORDEG_API ordeg_status ordeg_verify_prop1(ordeg_prop1_report* out);

/* ---- serialization ------------------------------------------------------ */

/* Canonical edge list ("u v" lines, u < v, sorted, trailing newline; a
 * "# order N" first line only when isolated tail vertices make the order
 * ambiguous). Free with ordeg_string_free. out_len may be NULL. */
ORDEG_API ordeg_status ordeg_emit_edge_list(const ordeg_graph* g, char** out_text, size_t* out_len);

/* text_len = 0 means strlen(text). explicit_order < 0 defers to a "# order"
 * directive, else to 1 + max endpoint. */
ORDEG_API ordeg_status ordeg_parse_edge_list(const char* text, size_t text_len, int64_t explicit_order,
                                             ordeg_graph** out);

ORDEG_API void ordeg_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* ORDEG_H */
