/* Copyright 2026 The seqauction Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to libseqauction.
 *
 * Every fallible call returns an sqa_status. On failure the message is
 * available from sqa_last_error() on the calling thread until the next call.
 * Strings returned through char** out-parameters are owned by the caller and
 * must be released with sqa_free_string. Exact rationals cross the boundary
 * as "p/q" or "p" strings; structured results are JSON or CSV text.
 */

#ifndef SEQAUCTION_SEQAUCTION_H_
#define SEQAUCTION_SEQAUCTION_H_

#include <stdint.h>

#if defined(SQA_BUILDING_LIBRARY)
#define SQA_API __attribute__((visibility("default")))
#else
#define SQA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sqa_status {
  SQA_OK = 0,
  SQA_ERR_INVALID_ARGUMENT = 1, /* null pointer, unknown name, bad option */
  SQA_ERR_PARSE = 2,            /* malformed instance JSON or rational */
  SQA_ERR_VALIDATION = 3,       /* instance violates the model */
  SQA_ERR_RANGE = 4,            /* T or k out of range */
  SQA_ERR_INTERNAL = 5,         /* broken invariant; please report */
  SQA_ERR_IO = 6                /* filesystem failure */
} sqa_status;

typedef struct sqa_instance sqa_instance;
typedef struct sqa_solution sqa_solution;

SQA_API const char* sqa_version(void);
SQA_API const char* sqa_status_name(sqa_status status);
SQA_API const char* sqa_last_error(void);
SQA_API void sqa_free_string(char* s);

/* Instances. */
SQA_API sqa_status sqa_instance_parse_json(const char* text,
                                           sqa_instance** out);
/* family: example1 | tight-concave | tight-general | random-concave |
 * random-general. k is used by tight-concave only; seed and scale by the
 * random families. */
SQA_API sqa_status sqa_instance_generate(const char* family, int T, int k,
                                         uint64_t seed, int scale,
                                         sqa_instance** out);
SQA_API void sqa_instance_free(sqa_instance* inst);
SQA_API sqa_status sqa_instance_items(const sqa_instance* inst, int* T);
SQA_API sqa_status sqa_instance_to_json(const sqa_instance* inst, char** out);
/* *valid is 1 or 0; report is {"valid", "violations", "concave"}. */
SQA_API sqa_status sqa_instance_validate(const sqa_instance* inst, int* valid,
                                         char** report_json);

/* Equilibrium. Fails with SQA_ERR_VALIDATION on an invalid instance. */
SQA_API sqa_status sqa_solve(const sqa_instance* inst, sqa_solution** out);
SQA_API void sqa_solution_free(sqa_solution* sol);
/* Node table keyed by "x1,x2". */
SQA_API sqa_status sqa_solution_to_json(const sqa_solution* sol, char** out);
/* policy: "all" (one witness path per reachable endpoint), "favor-buyer1",
 * "favor-buyer2" or "alternate". */
SQA_API sqa_status sqa_solution_paths_json(const sqa_solution* sol,
                                           const char* policy, char** out);
SQA_API sqa_status sqa_solution_min_efficiency(const sqa_solution* sol,
                                               char** exact);
/* One JSON object per line per check; *all_passed is 1 or 0. */
SQA_API sqa_status sqa_solution_verify(const sqa_solution* sol,
                                       int* all_passed, char** jsonl);

/* Bounds. cls: "concave" | "general"; method: "formula" | "lp" |
 * "certificate". 0 <= k <= T. */
SQA_API sqa_status sqa_bound(int T, int k, const char* cls,
                             const char* method, char** exact);
SQA_API sqa_status sqa_bound_min_over_k(int T, const char* cls,
                                        const char* method, char** exact,
                                        int* argmin_k);
/* Per-row dual slack table; 0 <= k < T. *feasible is 1 or 0. */
SQA_API sqa_status sqa_certify_csv(int T, int k, const char* cls,
                                   int* feasible, char** csv);
SQA_API sqa_status sqa_poa_table_csv(int t_min, int t_max, int lp_max_t,
                                     int threads, char** csv);
/* quarantine_dir may be NULL. */
SQA_API sqa_status sqa_fuzz(const char* family, int count, int t_min,
                            int t_max, uint64_t base_seed, int scale,
                            int threads, const char* quarantine_dir,
                            int* all_passed, char** summary_json);

/* Decimal rendering of an exact rational, rounded half away from zero. */
SQA_API sqa_status sqa_rational_decimal(const char* exact, int places,
                                        char** out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* SEQAUCTION_SEQAUCTION_H_ */
