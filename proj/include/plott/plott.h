// Copyright 2026 The Plott Authors.
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

/* C interface to the plott library.
 *
 * Problems are opaque handles. Every operation returns a status code; on
 * success the result is written as a JSON document into a string that the
 * caller releases with plott_string_free. On failure plott_last_error()
 * describes the problem until the next call on the same thread.
 *
 * Name lists are arrays of NUL-terminated strings. Passing NULL where a list
 * is optional selects the default documented for that call.
 *
 * Exhaustive work is bounded by the environment variables
 * PLOTT_AUDIT_LIMIT (default 16), PLOTT_PAIR_AUDIT_LIMIT (default 12) and
 * PLOTT_ENUM_LIMIT (default 20), read at each call. */

#ifndef PLOTT_PLOTT_H_
#define PLOTT_PLOTT_H_

#include <stddef.h>

#if defined(_WIN32)
#define PLOTT_API __declspec(dllexport)
#else
#define PLOTT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct plott_problem plott_problem;

typedef enum plott_status {
  PLOTT_OK = 0,
  PLOTT_ERR_SYNTAX = 1,
  PLOTT_ERR_INPUT = 2,
  PLOTT_ERR_DOMAIN = 3,
  PLOTT_ERR_STRUCTURE = 4,
  PLOTT_ERR_PRECONDITION = 5,
  PLOTT_ERR_CONNECTIVITY = 6,
  PLOTT_ERR_LIMIT = 7,
  PLOTT_ERR_INTERNAL = 8,
  PLOTT_ERR_ARGUMENT = 9 /* NULL handle or output pointer */
} plott_status;

PLOTT_API const char* plott_status_name(plott_status status);
PLOTT_API const char* plott_last_error(void);

PLOTT_API plott_status plott_problem_parse(const char* text, size_t length,
                                           plott_problem** out);
PLOTT_API plott_status plott_problem_load(const char* path,
                                          plott_problem** out);
PLOTT_API void plott_problem_free(plott_problem* problem);
PLOTT_API void plott_string_free(char* text);

/* Canonical instance text. */
PLOTT_API plott_status plott_serialize(const plott_problem* problem,
                                       char** out_json);

/* Axiom audit of one agent's CF, or of every agent when agent is NULL.
 * "verdict" is true when every audited CF is Plott. */
PLOTT_API plott_status plott_audit(const plott_problem* problem,
                                   const char* agent, char** out_json);

/* Sequential decomposition of an agent's CF into at most max_q linear
 * stages; max_q <= 0 means the number of the agent's contracts. */
PLOTT_API plott_status plott_decompose(const plott_problem* problem,
                                       const char* agent, int max_q,
                                       char** out_json);

PLOTT_API plott_status plott_check(const plott_problem* problem,
                                   const char* const* system, size_t count,
                                   char** out_json);

PLOTT_API plott_status plott_enumerate(const plott_problem* problem,
                                       char** out_json);

/* Worker-return procedure; order NULL returns workers in declaration
 * order. */
PLOTT_API plott_status plott_solve(const plott_problem* problem,
                                   const char* const* order, size_t count,
                                   char** out_json);

/* Blair comparison S ⪯ T. "verdict" is for `agent` when given, otherwise
 * for all firms when sides are declared, otherwise for all agents. */
PLOTT_API plott_status plott_compare(const plott_problem* problem,
                                     const char* const* s, size_t s_count,
                                     const char* const* t, size_t t_count,
                                     const char* agent, char** out_json);

/* Splits the given workers, or the default set when workers is NULL. Writes
 * the modified instance, its mapping file and a summary report. */
PLOTT_API plott_status plott_split(const plott_problem* problem,
                                   const char* const* workers, size_t count,
                                   char** out_instance, char** out_mapping,
                                   char** out_json);

/* Equivalence check of the split; "verdict" is true when every measured
 * property holds. */
PLOTT_API plott_status plott_verify(const plott_problem* problem,
                                    const char* const* workers, size_t count,
                                    char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* PLOTT_PLOTT_H_ */
