/* C interface to the power graph library.
 *
 * Every call returns a pg_status. On failure the message is available from
 * pg_last_error() until the next call on the same thread. Strings returned
 * through char** out-parameters are owned by the caller and released with
 * pg_free_string(); handles are released with their *_free function.
 */
#ifndef PG_PG_H
#define PG_PG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PG_BUILDING_LIBRARY)
#    define PG_API __declspec(dllexport)
#  else
#    define PG_API __declspec(dllimport)
#  endif
#else
#  define PG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pg_status {
  PG_OK = 0,
  PG_ERR_USAGE = 1,      /* bad argument, parse error, unknown name */
  PG_ERR_VALIDATION = 2, /* malformed file or violated group axiom */
  PG_ERR_RESOURCE = 3,   /* a size cap was exceeded */
  PG_ERR_DOMAIN = 4,     /* operation undefined for this input */
  PG_ERR_INTERNAL = 5
} pg_status;

typedef enum pg_variant {
  PG_VARIANT_REDUCED = 0, /* G minus the identity */
  PG_VARIANT_FULL = 1,
  PG_VARIANT_DIRECTED = 2
} pg_variant;

typedef enum pg_format { PG_FORMAT_DOT = 0, PG_FORMAT_EDGELIST = 1, PG_FORMAT_JSON = 2 } pg_format;

typedef struct pg_group pg_group;
typedef struct pg_graph pg_graph;

typedef struct pg_summary {
  uint64_t pass;
  uint64_t fail;
  uint64_t skipped;
} pg_summary;

PG_API const char* pg_version(void);
PG_API const char* pg_last_error(void);
PG_API void pg_free_string(char* s);

/* Group order cap for every constructor. Defaults to 10000, or to the value
 * of the PG_MAX_ORDER environment variable when set. */
PG_API pg_status pg_set_max_order(uint64_t max_order);
PG_API uint64_t pg_get_max_order(void);

/* ---- groups ---- */
PG_API pg_status pg_group_from_spec(const char* spec, pg_group** out);
PG_API pg_status pg_group_load(const char* path, pg_group** out);
PG_API pg_status pg_group_save(const pg_group* g, const char* path);
PG_API void pg_group_free(pg_group* g);

PG_API pg_status pg_group_name(const pg_group* g, char** out);
PG_API pg_status pg_group_order(const pg_group* g, uint64_t* out);
PG_API pg_status pg_group_multiply(const pg_group* g, uint32_t a, uint32_t b, uint32_t* out);
PG_API pg_status pg_group_element_order(const pg_group* g, uint32_t a, uint64_t* out);
PG_API pg_status pg_group_exponent(const pg_group* g, uint64_t* out);
/* *out = p when |G| = p^k (k >= 1), 0 otherwise. */
PG_API pg_status pg_group_p_group_prime(const pg_group* g, uint64_t* out);
PG_API pg_status pg_group_is_nilpotent(const pg_group* g, int* out);
PG_API pg_status pg_group_is_cyclic(const pg_group* g, int* out);
PG_API pg_status pg_group_is_generalized_quaternion(const pg_group* g, int* out);
/* max over elements a of weight(o(a)): the clique number of the reduced graph. */
PG_API pg_status pg_group_clique_formula(const pg_group* g, uint64_t* out);
/* JSON object with order, exponent, nilpotency, graph counts, diameter, clique numbers. */
PG_API pg_status pg_group_stats_json(const pg_group* g, char** out);

/* ---- power graphs ---- */
PG_API pg_status pg_graph_build(const pg_group* g, pg_variant variant, pg_graph** out);
PG_API pg_status pg_graph_build_custom(const pg_group* g, const uint32_t* elements, size_t count,
                                       pg_graph** out);
PG_API void pg_graph_free(pg_graph* graph);

PG_API pg_status pg_graph_vertex_count(const pg_graph* graph, uint64_t* out);
PG_API pg_status pg_graph_edge_count(const pg_graph* graph, uint64_t* out);
PG_API pg_status pg_graph_export(const pg_graph* graph, pg_format format, char** out);
PG_API pg_status pg_graph_component_count(const pg_graph* graph, uint64_t* out);
/* *connected = 0 leaves *diameter untouched. */
PG_API pg_status pg_graph_diameter(const pg_graph* graph, int* connected, uint64_t* diameter);
PG_API pg_status pg_graph_clique_number(const pg_graph* graph, uint64_t* out);

/* ---- number theory ---- */
PG_API pg_status pg_euler_phi(uint64_t n, uint64_t* out);
PG_API pg_status pg_weight(uint64_t n, uint64_t* out);
/* [{"chain": [...], "weight": w}, ...] ascending by weight, then chain. */
PG_API pg_status pg_mcd_sets_json(uint64_t n, char** out);

/* ---- verification ----
 * corpus: NULL or "default" for the built-in corpus, else comma-separated specs.
 * claims: NULL or "all", else comma-separated claim ids.
 * max_order: groups of larger order are left out (0 = no filter).
 * timings: nonzero fills "ms" with measured times (output is then not reproducible).
 * report_json and summary may each be NULL. */
PG_API pg_status pg_verify(const char* corpus, const char* claims, uint64_t max_order, unsigned workers,
                           int timings, char** report_json, pg_summary* summary);

#ifdef __cplusplus
}
#endif

#endif /* PG_PG_H */
