/* C interface to the cliqueval library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a cqv_status; on failure a thread-local
 * message is available from cqv_last_error() until the next failing call.
 * Strings returned through char** are heap allocated and released with
 * cqv_string_free().
 */
#ifndef CLIQUEVAL_H
#define CLIQUEVAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CLIQUEVAL_BUILDING)
#    define CQV_API __declspec(dllexport)
#  else
#    define CQV_API __declspec(dllimport)
#  endif
#else
#  define CQV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cqv_status {
    CQV_OK = 0,
    CQV_E_INVALID_ARGUMENT = 1,
    CQV_E_PARSE = 2,
    CQV_E_OUT_OF_RANGE = 3,
    CQV_E_INELIGIBLE = 4,
    CQV_E_LIMIT = 5,
    CQV_E_INTERNAL = 6,
    CQV_E_BUFFER_TOO_SMALL = 7
} cqv_status;

typedef enum cqv_format {
    CQV_FORMAT_JSON = 0,
    CQV_FORMAT_CSV = 1
} cqv_format;

typedef struct cqv_graph cqv_graph;
typedef struct cqv_packing cqv_packing;

typedef struct cqv_rational {
    int64_t num;
    int64_t den;
} cqv_rational;

typedef struct cqv_budget {
    uint64_t node_limit;
    double time_limit_seconds;
} cqv_budget;

CQV_API const char * cqv_version(void);
CQV_API const char * cqv_last_error(void);
CQV_API const char * cqv_status_name(cqv_status status);
CQV_API void cqv_string_free(char * s);

/* Graphs. Vertex ids are 0-based. */
CQV_API cqv_status cqv_graph_from_edges(size_t n, const uint32_t * endpoints, size_t edge_count, cqv_graph ** out);
CQV_API cqv_status cqv_graph_from_edge_list_text(const char * text, int one_based, cqv_graph ** out);
CQV_API cqv_status cqv_graph_from_graph6(const char * text, cqv_graph ** out);
/* spec: complete:N cycle:N bipartite:A,B turan:N,R book:K gnp:N,P */
CQV_API cqv_status cqv_graph_generate(const char * spec, uint64_t seed, cqv_graph ** out);
CQV_API void cqv_graph_free(cqv_graph * g);

CQV_API size_t cqv_graph_vertex_count(const cqv_graph * g);
CQV_API uint64_t cqv_graph_edge_count(const cqv_graph * g);
/* Writes up to capacity neighbours; *count receives the degree. */
CQV_API cqv_status cqv_graph_neighborhood(const cqv_graph * g, uint32_t v, uint32_t * out, size_t capacity, size_t * count);
CQV_API cqv_status cqv_graph_to_graph6(const cqv_graph * g, char ** out);
CQV_API cqv_status cqv_graph_to_edge_list_text(const cqv_graph * g, int one_based, char ** out);

/* Cliques. */
CQV_API cqv_status cqv_clique_census(const cqv_graph * g, uint64_t * counts, size_t capacity, size_t * length);
CQV_API cqv_status cqv_clique_count(const cqv_graph * g, size_t k, uint64_t * out);
CQV_API cqv_status cqv_clique_value(const cqv_graph * g, const uint32_t * vertices, size_t k, uint64_t * out);

typedef struct cqv_handshaking {
    size_t k;
    uint64_t value_sum;
    uint64_t rhs;
    int equal;
} cqv_handshaking;

CQV_API cqv_status cqv_verify_handshaking(const cqv_graph * g, size_t k, cqv_handshaking * out);

CQV_API cqv_status cqv_subgraph_count(const cqv_graph * h, const cqv_graph * g, uint64_t * out);

typedef struct cqv_kelly {
    uint64_t lhs;
    uint64_t rhs;
    int equal;
} cqv_kelly;

/* CQV_E_INELIGIBLE when g has an isolated vertex. */
CQV_API cqv_status cqv_verify_kelly(const cqv_graph * h, const cqv_graph * g, cqv_kelly * out);

/* Independent families of k-cliques. */
CQV_API cqv_budget cqv_default_budget(void);
CQV_API cqv_status cqv_max_clique_packing(const cqv_graph * g, size_t k, const cqv_budget * budget, cqv_packing ** out);
CQV_API cqv_status cqv_greedy_packing(const cqv_graph * g, size_t k, cqv_packing ** out);
CQV_API size_t cqv_packing_size(const cqv_packing * p);
CQV_API size_t cqv_packing_order(const cqv_packing * p);
CQV_API int cqv_packing_optimal(const cqv_packing * p);
/* Copies the k vertices of member index into out (capacity >= k). */
CQV_API cqv_status cqv_packing_member(const cqv_packing * p, size_t index, uint32_t * out, size_t capacity);
CQV_API void cqv_packing_free(cqv_packing * p);

/* Mantel-type bounds: c_{k+1} <= c_k^2 / (4k) on K_{k+2}-free graphs. */
typedef struct cqv_bound {
    size_t k;
    int eligible;
    uint64_t lhs;
    cqv_rational rhs;
    int holds;
    cqv_rational slack;
} cqv_bound;

CQV_API cqv_status cqv_check_clique_mantel(const cqv_graph * g, size_t k, cqv_bound * out);
CQV_API cqv_status cqv_tightness_gap(const cqv_graph * g, size_t k, cqv_rational * out);

typedef enum cqv_verdict {
    CQV_STEP_HOLDS = 0,
    CQV_STEP_FAILS = 1,
    CQV_STEP_UNKNOWN = 2
} cqv_verdict;

typedef struct cqv_step {
    char id[4];
    cqv_rational lhs;
    cqv_rational rhs;
    cqv_verdict verdict;
} cqv_step;

typedef struct cqv_proof_chain {
    size_t k;
    uint64_t a_size;
    uint64_t b_size;
    int tainted;
    cqv_step steps[5];
    cqv_bound final_bound;
} cqv_proof_chain;

CQV_API cqv_status cqv_verify_proof_chain(const cqv_graph * g, size_t k, const cqv_budget * budget, cqv_proof_chain * out);

/* Reports. finding_count may be NULL. */
typedef struct cqv_analyze_options {
    const size_t * orders;
    size_t order_count;
    int chain;
    int one_based;
    cqv_budget budget;
} cqv_analyze_options;

CQV_API cqv_status cqv_analyze(const cqv_graph * g, const cqv_analyze_options * options, cqv_format format,
        char ** report, size_t * finding_count);

enum {
    CQV_SUITE_HANDSHAKING = 1,
    CQV_SUITE_KELLY = 2,
    CQV_SUITE_BOUNDS = 4,
    CQV_SUITE_ORACLE = 8,
    CQV_SUITE_CHAIN = 16
};

typedef struct cqv_verify_options {
    int exhaustive;
    size_t exhaustive_n;
    uint64_t random_count;
    uint64_t seed;
    size_t random_max_n;
    unsigned suites; /* 0 = all */
    cqv_budget budget;
} cqv_verify_options;

CQV_API cqv_status cqv_verify(const cqv_verify_options * options, cqv_format format, char ** report, size_t * finding_count);

typedef struct cqv_hunt_options {
    size_t n;
    const double * p_grid;
    size_t p_count;
    uint64_t samples;
    uint64_t seed;
    const size_t * orders;
    size_t order_count;
    const char * target; /* bound | steps | all | step:S1..S5 */
    cqv_budget budget;
} cqv_hunt_options;

CQV_API cqv_status cqv_hunt(const cqv_hunt_options * options, cqv_format format, char ** report, size_t * finding_count);

/* Re-runs every finding of a JSON report against its decoded witness. */
CQV_API cqv_status cqv_report_recheck(const char * json, size_t * total, size_t * reproduced);

#ifdef __cplusplus
}
#endif

#endif
