// Copyright 2026 The tempowl Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the tempowl library.
 *
 * Conventions: every fallible call returns a tw_status. On failure the
 * message is available from tw_last_error() on the calling thread until the
 * next call. Strings returned through char** are heap allocated and must be
 * released with tw_string_free. Graph handles are immutable and may be
 * shared between threads.
 */
#ifndef TEMPOWL_TEMPOWL_H_
#define TEMPOWL_TEMPOWL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TW_EXPORT __declspec(dllexport)
#elif defined(__GNUC__)
#define TW_EXPORT __attribute__((visibility("default")))
#else
#define TW_EXPORT
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tw_status {
  TW_OK = 0,
  TW_INVALID_ARGUMENT = 1,
  TW_PARSE_ERROR = 2,
  TW_IO_ERROR = 3,
  TW_EMPTY_TIMES = 4,
  TW_NON_INCREASING_TIMES = 5,
  TW_SNAPSHOT_COUNT_MISMATCH = 6,
  TW_DUPLICATE_NODE = 7,
  TW_UNKNOWN_NODE = 8,
  TW_SELF_LOOP = 9,
  TW_DUPLICATE_EDGE = 10,
  TW_MISSING_COLOUR = 11,
  TW_NOT_COLOUR_PERSISTENT = 12,
  TW_EMPTY_EDGE_SET = 13,
  TW_LAYER_NOT_COMPUTED = 14,
  TW_SIZE_LIMIT_EXCEEDED = 15,
  TW_CONFIG_MISMATCH = 16,
  TW_UNKNOWN_FIXTURE = 17,
  TW_UNKNOWN_TIME = 18,
  TW_INTERNAL = 19
} tw_status;

typedef enum tw_encoding { TW_ENCODING_GLOBAL = 0, TW_ENCODING_LOCAL = 1 } tw_encoding;

typedef enum tw_mode {
  TW_MODE_GLOBAL = 0,
  TW_MODE_LOCAL = 1,
  TW_MODE_BOTH = 2
} tw_mode;

typedef enum tw_variant {
  TW_VARIANT_SUM_SIGN = 0,
  TW_VARIANT_CONCAT_SUM_RELU = 1,
  TW_VARIANT_HASH_INJECTIVE = 2
} tw_variant;

typedef enum tw_iso_kind { TW_ISO_POINTWISE = 0, TW_ISO_TIMEWISE = 1 } tw_iso_kind;

typedef struct tw_graph tw_graph;

typedef struct tw_gen_options {
  uint64_t seed;
  size_t nodes;
  size_t snapshots;
  double edge_prob;
  size_t palette;
  int colour_persistent;
  int uniform_grid;
  int64_t max_gap;
} tw_gen_options;

typedef struct tw_sim_options {
  tw_mode mode; /* TW_MODE_GLOBAL or TW_MODE_LOCAL */
  tw_variant variant;
  uint64_t seed;
  size_t layers;
  size_t width;
} tw_sim_options;

TW_EXPORT const char* tw_version(void);
TW_EXPORT const char* tw_status_name(tw_status status);
TW_EXPORT const char* tw_last_error(void);
TW_EXPORT void tw_string_free(char* s);

/* Fills defaults: 4 nodes, 3 snapshots, p = 0.3, 2 colours, uniform grid. */
TW_EXPORT void tw_gen_options_init(tw_gen_options* options);
/* Fills defaults: global, sum_sign, seed 0, 2 layers, width 8. */
TW_EXPORT void tw_sim_options_init(tw_sim_options* options);

/* Graph construction and inspection. */
TW_EXPORT tw_status tw_graph_from_json(const char* json, tw_graph** out);
TW_EXPORT tw_status tw_graph_from_events_csv(const char* csv,
                                             const char* default_colour,
                                             tw_graph** out);
TW_EXPORT tw_status tw_graph_to_json(const tw_graph* graph, char** out);
TW_EXPORT void tw_graph_free(tw_graph* graph);
TW_EXPORT size_t tw_graph_num_nodes(const tw_graph* graph);
TW_EXPORT size_t tw_graph_num_snapshots(const tw_graph* graph);
TW_EXPORT size_t tw_graph_num_edges(const tw_graph* graph);
TW_EXPORT int tw_graph_is_colour_persistent(const tw_graph* graph);

/* Returns TW_OK for a valid document, the first violation's status
 * otherwise (TW_PARSE_ERROR for malformed JSON). *report receives a JSON
 * object {"valid":bool,"code":...,"message":...}. */
TW_EXPORT tw_status tw_validate_json(const char* json, char** report);

/* Fixtures: fig2, fig3, fig5_pair, fig6_pair. *second is set to NULL for
 * single-graph fixtures; it may be NULL if the caller wants only one. */
TW_EXPORT tw_status tw_fixture(const char* name, tw_graph** first,
                               tw_graph** second);
TW_EXPORT tw_status tw_generate(const tw_gen_options* options, tw_graph** out);
TW_EXPORT tw_status tw_time_shift(const tw_graph* graph, int64_t delta,
                                  tw_graph** out);

/* Knowledge-graph encodings and refinement. max_layers < 0 = unbounded. */
TW_EXPORT tw_status tw_transform(const tw_graph* graph, tw_encoding encoding,
                                 char** json);
TW_EXPORT tw_status tw_refine(const tw_graph* graph, tw_encoding encoding,
                              int64_t max_layers, char** json);

/* Nodes are addressed as "id@timestamp" or "id#index". */
TW_EXPORT tw_status tw_compare(const tw_graph* first, const char* node1,
                               const tw_graph* second, const char* node2,
                               tw_mode mode, int64_t max_layers, char** json);
TW_EXPORT tw_status tw_classify(const tw_graph* first, const tw_graph* second,
                                char** csv);
/* node1/node2 may both be NULL (graph-level question) or both set, in
 * which case the witness must relate those timestamped nodes.
 * node_bound = 0 keeps the default of 64. */
TW_EXPORT tw_status tw_iso(const tw_graph* first, const tw_graph* second,
                           tw_iso_kind kind, size_t node_bound,
                           const char* node1, const char* node2, char** json);
TW_EXPORT tw_status tw_simulate(const tw_graph* graph,
                                const tw_sim_options* options, char** json);

/* Runs `trials` seeded trials of a property; *violations receives the
 * number of failing trials. threads = 0 uses the default pool size. */
TW_EXPORT tw_status tw_fuzz(const char* property, uint64_t trials,
                            uint64_t seed, size_t threads, char** json,
                            uint64_t* violations);

/* Node, edge and step counts of an event CSV. */
TW_EXPORT tw_status tw_event_stats(const char* csv, char** json);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // TEMPOWL_TEMPOWL_H_
