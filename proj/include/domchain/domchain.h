/* C interface to the domchain library.
 *
 * Objects are opaque handles created by dc_*_create/parse/read functions and
 * released with the matching dc_*_free. Every fallible call returns a
 * dc_status; on failure dc_last_error() describes the problem for the
 * calling thread. Strings returned through char** are heap-allocated and
 * must be released with dc_string_free. */
#ifndef DOMCHAIN_H
#define DOMCHAIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DOMCHAIN_BUILDING)
#    define DC_API __declspec(dllexport)
#  else
#    define DC_API __declspec(dllimport)
#  endif
#else
#  define DC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dc_status {
  DC_OK = 0,
  DC_INVALID_ARGUMENT = 1,
  DC_PARSE_ERROR = 2,
  DC_CAPACITY_ERROR = 3,
  DC_PRECONDITION_ERROR = 4,
  DC_INTERNAL_ERROR = 5
} dc_status;

typedef enum dc_format {
  DC_FORMAT_JSON = 0,
  DC_FORMAT_CSV = 1,
  DC_FORMAT_TABLE = 2
} dc_format;

typedef enum dc_input_format {
  DC_INPUT_AUTO = 0,
  DC_INPUT_GRAPH6 = 1,
  DC_INPUT_EDGE_LIST = 2
} dc_input_format;

typedef struct dc_graph dc_graph;
typedef struct dc_graph_list dc_graph_list;
typedef struct dc_report dc_report;
typedef struct dc_family dc_family;
typedef struct dc_corpus dc_corpus;

DC_API const char* dc_version(void);

/* Message of the last failed call on this thread; "" after a success. */
DC_API const char* dc_last_error(void);
/* Byte offset of the last parse error on this thread, or -1. */
DC_API long long dc_last_error_offset(void);
DC_API void dc_string_free(char* s);

/* Input capacity from DOMCHAIN_CAPACITY, default 32. Functions taking a
 * capacity use this value when passed 0. */
DC_API int dc_default_capacity(void);

/* ---- graphs ---- */

DC_API dc_status dc_graph_parse_graph6(const char* text, int capacity, dc_graph** out);
DC_API dc_status dc_graph_parse_edge_list(const char* text, int capacity, dc_graph** out);
/* `pairs` holds 2 * edge_count vertex indices. */
DC_API dc_status dc_graph_from_edges(int order, const int* pairs, size_t edge_count,
                                     dc_graph** out);
DC_API void dc_graph_free(dc_graph* g);
DC_API int dc_graph_order(const dc_graph* g);
DC_API int dc_graph_adjacent(const dc_graph* g, int u, int v);
DC_API dc_status dc_graph_to_graph6(const dc_graph* g, char** out);
DC_API dc_status dc_graph_to_edge_list(const dc_graph* g, char** out);

/* Reads every graph in `text`. Entries that fail to parse are kept with
 * their message, so one bad line does not hide the rest. */
DC_API dc_status dc_graph_list_read(const char* text, size_t length,
                                    dc_input_format format, int capacity,
                                    dc_graph_list** out);
DC_API size_t dc_graph_list_size(const dc_graph_list* list);
/* Borrowed views valid until the list is freed. Exactly one of *graph and
 * *error is non-NULL. `line` is 1-based. */
DC_API dc_status dc_graph_list_entry(const dc_graph_list* list, size_t index,
                                     size_t* line, const dc_graph** graph,
                                     const char** error);
DC_API void dc_graph_list_free(dc_graph_list* list);

/* ---- parameters ---- */

/* Parameter names: "ir", "gamma", "i", "alpha", "Gamma", "IR", "OIR", "IS",
 * "IRS" (case-sensitive). `witness` receives the vertex mask of the
 * certifying set and may be NULL. */
DC_API dc_status dc_compute(const dc_graph* g, const char* param, int* value,
                            uint64_t* witness);

DC_API dc_status dc_report_compute(const dc_graph* g, dc_report** out);
DC_API dc_status dc_report_value(const dc_report* r, const char* param, int* value);
/* `params` is a comma-separated projection or NULL/"" for every column. */
DC_API dc_status dc_report_format(const dc_report* r, const char* source,
                                  const char* params, dc_format format, char** out);
DC_API dc_status dc_report_header(const char* params, dc_format format, char** out);
DC_API void dc_report_free(dc_report* r);
/* Inline record for a graph that could not be read or computed. */
DC_API dc_status dc_format_input_error(const char* source, const char* message,
                                       char** out);

/* ---- families ---- */

DC_API const char* dc_family_grammar(void);
DC_API dc_status dc_family_generate(const char* spec, dc_graph** out);

/* Forbidden family: members separated by ';' or spaces, each a family spec
 * or "BSVn^p" for every bistar variant. */
DC_API dc_status dc_family_parse(const char* text, dc_family** out);
DC_API void dc_family_free(dc_family* f);
DC_API dc_status dc_hfree_check(const dc_graph* g, const dc_family* f,
                                const char* source, dc_format format, int header,
                                int* is_free, char** out);

/* ---- corpora ---- */

/* Every labelled graph of order min_order..max_order (at most 7). */
DC_API dc_status dc_corpus_labeled(int min_order, int max_order, dc_corpus** out);
/* The graphs of a list, skipping entries that failed to parse. */
DC_API dc_status dc_corpus_from_list(const dc_graph_list* list, dc_corpus** out);
DC_API uint64_t dc_corpus_size(const dc_corpus* c);
DC_API void dc_corpus_free(dc_corpus* c);

/* ---- scans and Ramsey-type searches ----
 * `jobs` <= 0 uses every available core. */

DC_API dc_status dc_scan(const dc_corpus* c, const dc_family* f, const char* param,
                         int jobs, dc_format format, char** out);
DC_API dc_status dc_ramsey_classic(int m, int n, int order_cap, int jobs,
                                   dc_format format, char** out);
DC_API dc_status dc_ramsey_bipartite(int n, int side_cap, int jobs, dc_format format,
                                     char** out);
/* br <= 0 decides BR(n) first. */
DC_API dc_status dc_ramsey_lemma(int n, int p, int br, int jobs, dc_format format,
                                 uint64_t* violations, char** out);
DC_API dc_status dc_ramsey_zverovich(const dc_corpus* c, int k, int connected_only,
                                     int jobs, dc_format format, uint64_t* violations,
                                     char** out);
DC_API dc_status dc_ramsey_konig(const dc_corpus* c, int skip_non_bipartite, int jobs,
                                 dc_format format, uint64_t* violations, char** out);
DC_API dc_status dc_ramsey_lozin(int n, const dc_corpus* c, int jobs, dc_format format,
                                 char** out);

/* ---- verification suites ---- */

typedef struct dc_verify_options {
  const char* suites; /* comma-separated; NULL or "" runs every suite */
  int max_order;      /* 0: per-suite default */
  int n_min;
  int n_max;
  int jobs;
} dc_verify_options;

DC_API void dc_verify_options_init(dc_verify_options* opts);
/* Comma-separated suite names. */
DC_API const char* dc_verify_suite_names(void);
DC_API dc_status dc_verify(const dc_verify_options* opts, dc_format format, int* passed,
                           char** out);

#ifdef __cplusplus
}
#endif

#endif /* DOMCHAIN_H */
