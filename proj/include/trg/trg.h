/*
 * trg: two-round triangle Ramsey game laboratory.
 *
 * C interface over the C++ core.  All objects are opaque handles; every
 * function returns a trg_status, writes results through out-parameters, and
 * leaves outputs untouched on failure.  Strings returned through char** are
 * heap-allocated and must be released with trg_string_free.  On failure,
 * trg_last_error() returns a thread-local description.
 */

#ifndef TRG_H
#define TRG_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum trg_status {
    TRG_OK = 0,
    TRG_ERR_INVALID_ARGUMENT = 1,
    TRG_ERR_PARSE = 2,
    TRG_ERR_TOO_LARGE = 3,
    TRG_ERR_BUDGET_EXHAUSTED = 4, /* search gave up: answer unknown */
    TRG_ERR_PRECONDITION = 5,
    TRG_ERR_FALSIFIED = 6,        /* a structural guarantee failed on an instance */
    TRG_ERR_IMPOSSIBLE = 7,       /* search proved no triangle-free colouring exists */
    TRG_ERR_INTERNAL = 8
} trg_status;

typedef struct trg_graph trg_graph;
typedef struct trg_colouring trg_colouring;

const char* trg_version(void);
const char* trg_last_error(void);
void trg_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

/* Edge-list text: "n m" header then "u v" lines with 0 <= u < v < n. */
trg_status trg_graph_from_edge_list(const char* text, trg_graph** out);
trg_status trg_graph_to_edge_list(const trg_graph* g, char** out);
trg_status trg_graph_sample_gnp(int n, double p, uint64_t master_seed, uint64_t stream_id,
                                trg_graph** out);
trg_status trg_graph_union(const trg_graph* a, const trg_graph* b, trg_graph** out);
void trg_graph_free(trg_graph* g);
int trg_graph_n(const trg_graph* g);
long long trg_graph_m(const trg_graph* g);
int trg_graph_max_degree(const trg_graph* g);

/* ---- pattern census --------------------------------------------------- */

trg_status trg_pattern_names(char** out_csv);
trg_status trg_census_count(const trg_graph* g, const char* pattern, uint64_t* out);
/* Count copies of a user-supplied pattern given in edge-list text (at most 13
 * vertices). */
trg_status trg_census_count_custom(const trg_graph* g, const char* pattern_edge_list,
                                   uint64_t* out);
/* CSV "pattern,count" rows over the whole library. */
trg_status trg_census_csv(const trg_graph* g, char** out);
/* Exact maximum subgraph density e(J)/v(J) of a library pattern. */
trg_status trg_pattern_density(const char* pattern, int64_t* num, int64_t* den);

/* ---- colourings ------------------------------------------------------- */

/* Colouring text: "u v c" lines with c in {r,b}. */
trg_status trg_colouring_read(const trg_graph* g, const char* text, trg_colouring** out);
trg_status trg_colouring_write(const trg_colouring* c, char** out);
void trg_colouring_free(trg_colouring* c);

trg_status trg_obstruction_report_json(const trg_colouring* c, int include_graph_edges,
                                       char** out);
/* good: 1/0.  violated: 0 none, 1 mono triangle, 2 red non-triangle edge,
 * 3 crrbb count at least t. */
trg_status trg_is_t_good(const trg_colouring* c, uint64_t t, int* good, int* violated);
trg_status trg_find_triangle_free(const trg_graph* g, long long node_budget, int recolour_blue,
                                  trg_colouring** out);

/* ---- collages ---------------------------------------------------------- */

/* density_mode: "exact" or "sufficient". */
trg_status trg_collage_table_csv(const trg_graph* g, const char* density_mode, double log_base,
                                 char** out);
/* Core-extraction log of the collage with the given table id; vertex_cap <= 0
 * keeps the log(n) halting rule. */
trg_status trg_core_log_json(const trg_graph* g, int collage_index, double log_base,
                             double vertex_cap, char** out);

/* ---- games ------------------------------------------------------------- */

/* strategy: "good", "naive" or "all_blue"; arrival: "random" or "lex". */
trg_status trg_first_round(const trg_graph* g, const char* strategy, long long node_budget,
                           uint64_t master_seed, uint64_t stream_id, trg_colouring** out_col,
                           char** out_report_json);
trg_status trg_two_round_game_json(int n, double p, double q, const char* strategy,
                                   long long node_budget, uint64_t master_seed,
                                   uint64_t stream_id, const char* arrival, int collect_stats,
                                   char** out_json);
/* Re-runs a stored transcript; TRG_OK when it reproduces and the witness is
 * valid, TRG_ERR_FALSIFIED otherwise (detail in *out_detail when non-null). */
trg_status trg_replay_transcript(const char* transcript_json, char** out_detail);
trg_status trg_online_game(int n, long long edge_budget, uint64_t master_seed,
                           uint64_t stream_id, long long* edges_played, int* failed,
                           long long* failure_index);

/* ---- density analysis --------------------------------------------------- */

/* Janson parameters of the red subgraph of c under edge probability p. */
trg_status trg_density_report_json(const trg_colouring* c, double p, char** out);
trg_status trg_threshold_json(double n, double p, double window_factor, double zero_constant,
                              char** out);

/* ---- experiment lab ------------------------------------------------------ */

trg_status trg_run_sweep_csv(const char* config_json, char** out_csv);
/* points_json: [{"q":..,"successes":..,"trials":..}, ...] */
trg_status trg_estimate_crossing_json(const char* points_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* TRG_H */
