// Copyright 2026 The polimage Authors.
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

#ifndef POLIMAGE_POLIMAGE_H
#define POLIMAGE_POLIMAGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define POLIMAGE_API __declspec(dllexport)
#else
#define POLIMAGE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum polimage_status {
  POLIMAGE_OK = 0,
  POLIMAGE_ERR_PARSE = 1,
  POLIMAGE_ERR_INVALID_ARGUMENT = 2,
  POLIMAGE_ERR_DIVISION_BY_ZERO = 3,
  POLIMAGE_ERR_BUDGET = 4,
  POLIMAGE_ERR_CORPUS_MISMATCH = 5,
  POLIMAGE_ERR_INTERNAL = 6
} polimage_status;

typedef enum polimage_mode {
  POLIMAGE_MODE_SYMBOLIC = 0,
  POLIMAGE_MODE_PROBABILISTIC = 1,
  POLIMAGE_MODE_AUTO = 2
} polimage_mode;

typedef enum polimage_path {
  POLIMAGE_PATH_AUTO = 0,
  POLIMAGE_PATH_NAIVE = 1,
  POLIMAGE_PATH_MULTILINEAR = 2,
  POLIMAGE_PATH_ORBIT = 3
} polimage_path;

/* Noncommutative polynomial with rational coefficients. */
typedef struct polimage_poly polimage_poly;

typedef struct polimage_classify_options {
  uint64_t characteristic; /* 0 or a prime */
  polimage_mode mode;
  uint64_t seed;
  uint64_t search_budget; /* witness-search evaluations */
  uint64_t term_budget;   /* symbolic generic-evaluation terms */
  unsigned probe_trials;
  unsigned threads; /* 0: one */
  const long long* weights; /* optional semi-homogeneity weights, one per variable */
  size_t weights_len;
} polimage_classify_options;

/* Every JSON-producing call hands out a string owned by the caller (polimage_string_free).
   Documents carry "schema": 1. `pretty` selects indented output. */

POLIMAGE_API const char* polimage_version(void);

/* Thread-local description of the last failure; empty after success. */
POLIMAGE_API const char* polimage_last_error(void);
/* Byte offset of the last parse error, or -1. */
POLIMAGE_API long long polimage_last_error_position(void);

POLIMAGE_API void polimage_string_free(char* s);

/* vars = 0 infers the count from the largest index. */
POLIMAGE_API polimage_status polimage_poly_parse(const char* text, unsigned vars, polimage_poly** out);
POLIMAGE_API void polimage_poly_free(polimage_poly* p);
POLIMAGE_API polimage_status polimage_poly_to_string(const polimage_poly* p, char** out);
POLIMAGE_API unsigned polimage_poly_vars(const polimage_poly* p);
POLIMAGE_API polimage_status polimage_poly_linearize(const polimage_poly* p, polimage_poly** out);

POLIMAGE_API void polimage_classify_options_init(polimage_classify_options* opts);
POLIMAGE_API polimage_status polimage_classify(const polimage_poly* p, const polimage_classify_options* opts,
                                               int pretty, char** json);

/* Exhaustive image over M2(F_q), q prime <= 7. dump_path, when not NULL, receives the sorted image. */
POLIMAGE_API polimage_status polimage_enumerate(const polimage_poly* p, uint64_t q, uint64_t tuple_budget,
                                                polimage_path path, unsigned threads, const char* dump_path,
                                                int pretty, char** json);

/* matrix text "a,b;c,d" over the prime field of `characteristic` (or Q). */
POLIMAGE_API polimage_status polimage_cone(const char* matrix, uint64_t characteristic, int pretty, char** json);

/* units text "e12,e21"; p may be NULL for the prediction alone. */
POLIMAGE_API polimage_status polimage_euler(const char* units, const polimage_poly* p, int pretty, char** json);

POLIMAGE_API polimage_status polimage_verify_alternating_trace(uint64_t prime, unsigned trials, uint64_t seed,
                                                               int pretty, char** json);

/* only may be NULL. Returns POLIMAGE_ERR_CORPUS_MISMATCH, with the report in *json, when an entry fails. */
POLIMAGE_API polimage_status polimage_corpus(const char* only, uint64_t seed, unsigned threads, int pretty,
                                             char** json);

#ifdef __cplusplus
}
#endif

#endif
