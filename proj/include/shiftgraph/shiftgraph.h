// Copyright 2026 The shiftgraph Authors
//
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

/* C interface to the shiftgraph library.
 *
 * Every function returns a status code (0 on success, otherwise one of the
 * SG_E* values). On failure sg_last_error() describes the problem for the
 * calling thread. Functions producing text return a heap string that must be
 * released with sg_string_free. All JSON output is deterministic. */

#ifndef SHIFTGRAPH_SHIFTGRAPH_H_
#define SHIFTGRAPH_SHIFTGRAPH_H_

#include <stdint.h>

#if defined(_WIN32)
#define SG_API __declspec(dllexport)
#else
#define SG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
  SG_OK = 0,
  SG_EINVALID_CHARACTER = 1,
  SG_EUNBALANCED_TYPE = 2,
  SG_EEMPTY_TYPE = 3,
  SG_EWIDTH_MISMATCH = 4,
  SG_ENOT_SORTED = 5,
  SG_ESYNTAX = 6,
  SG_ENON_CANONICAL = 7,
  SG_EOUT_OF_RANGE = 8,
  SG_EBUDGET_EXCEEDED = 9,
  SG_EWIDTH_TOO_LARGE = 10,
  SG_EELEMENT_OUT_OF_GROUND = 11,
  SG_EUNSUPPORTED = 12,
  SG_EAMBIGUOUS_CENSUS = 13,
  SG_EWRONG_TYPE = 14,
  SG_ENOT_A_SHIFT_GRAPH = 15,
  SG_EOUT_OF_STATED_RANGE = 16,
  SG_EINVALID_ARGUMENT = 17,
  SG_EIO = 18,
  SG_EINTERNAL = 19
};

typedef struct sg_graph sg_graph;

SG_API const char* sg_last_error(void);
/* Stable name such as "WidthMismatch". */
SG_API const char* sg_status_name(int status);
SG_API void sg_string_free(char* s);

/* G(n, type). max_vertices == 0 keeps the library default. */
SG_API int sg_graph_build(uint32_t n, const char* type, uint64_t max_vertices, sg_graph** out);
/* Unlabelled graph from the JSON edge-list format. */
SG_API int sg_graph_from_json(const char* json, sg_graph** out);
/* Copy with vertex ids permuted by the seeded shuffle; labels are dropped. */
SG_API int sg_graph_shuffled(const sg_graph* g, uint64_t seed, sg_graph** out);
SG_API void sg_graph_free(sg_graph* g);

SG_API int sg_graph_num_vertices(const sg_graph* g, uint64_t* out);
SG_API int sg_graph_num_edges(const sg_graph* g, uint64_t* out);
SG_API int sg_graph_adjacent(const sg_graph* g, uint32_t u, uint32_t v, int* out);

/* format: "json", "dot" or "text". Unlabelled graphs support json only. */
SG_API int sg_graph_export(const sg_graph* g, const char* format, char** out);

/* Degree census, twin classes, quotient, isolated points and (for 132) the
 * complete-bipartite form check. */
SG_API int sg_analyze(const sg_graph* g, char** out_json);

/* Symbolic finite-degree census of G(ground, type); scope is "vertices",
 * "classes" or NULL for the default. Keys are degrees, "d+" marks a constant
 * tail, "inf" an infinite count. */
SG_API int sg_census(const char* ground, const char* type, const char* scope, char** out_json);
/* Census plus the inferred k and alpha. */
SG_API int sg_infer_alpha(const char* ground, const char* type, char** out_json);

/* detail != 0 adds assignments and the block trace. */
SG_API int sg_reconstruct(const sg_graph* g, const char* type, int detail, char** out_json);

/* exact == 0 reports greedy and clique bounds only. */
SG_API int sg_chromatic(const sg_graph* g, int exact, double budget_seconds, char** out_json);

/* compare != 0 also runs the backtracking oracle (when within its cap). */
SG_API int sg_aut(const sg_graph* g, int compare, char** out_json);

/* Full property suite (quick != 0: reduced caps). *passed receives 1/0. */
SG_API int sg_selftest(int quick, int* passed, char** out_json);
/* Test hook: corrupt graphs fed to the reconstruction suite. */
SG_API void sg_selftest_set_corruption(int enabled);

#ifdef __cplusplus
}
#endif

#endif /* SHIFTGRAPH_SHIFTGRAPH_H_ */
