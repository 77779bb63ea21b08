/* Copyright 2026 The regamb Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef REGAMB_REGAMB_H_
#define REGAMB_REGAMB_H_

#include <stddef.h>

#if defined(_WIN32)
#if defined(REGAMB_BUILDING_LIBRARY)
#define REGAMB_API __declspec(dllexport)
#else
#define REGAMB_API __declspec(dllimport)
#endif
#else
#define REGAMB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum regamb_status {
  REGAMB_OK = 0,
  REGAMB_ERR_SYNTAX = 1,
  REGAMB_ERR_SYMBOL = 2,
  REGAMB_ERR_PROBLEMATIC = 3,
  REGAMB_ERR_STATE_LIMIT = 4,
  REGAMB_ERR_WORD_TOO_LONG = 5,
  REGAMB_ERR_INVALID_ARGUMENT = 6,
  REGAMB_ERR_INTERNAL = 7
} regamb_status;

typedef enum regamb_policy { REGAMB_POSIX = 0, REGAMB_GREEDY = 1 } regamb_policy;

typedef enum regamb_verdict {
  REGAMB_UNAMBIGUOUS = 0,
  REGAMB_AMBIGUOUS = 1,
  REGAMB_REJECTED_PROBLEMATIC = 2
} regamb_verdict;

typedef enum regamb_format { REGAMB_TEXT = 0, REGAMB_JSON = 1 } regamb_format;

typedef struct regamb_regex regamb_regex;
typedef struct regamb_fst regamb_fst;
typedef struct regamb_report regamb_report;
typedef struct regamb_strings regamb_strings;

/* Message of the last failed call on this thread; empty after success. */
REGAMB_API const char* regamb_last_error(void);
REGAMB_API const char* regamb_status_name(regamb_status status);

/* Strings returned through char** are owned by the caller. */
REGAMB_API void regamb_string_free(char* s);

REGAMB_API regamb_status regamb_regex_parse(const char* text, regamb_regex** out);
REGAMB_API void regamb_regex_free(regamb_regex* r);
REGAMB_API regamb_status regamb_regex_print(const regamb_regex* r, char** out);
/* *out is NULL when r is not problematic. */
REGAMB_API regamb_status regamb_regex_problematic_subterm(const regamb_regex* r, char** out);

/* Parse trees in priority order, in the textual tree notation. */
REGAMB_API regamb_status regamb_all_parse(const regamb_regex* r, const char* word,
                                          regamb_strings** out);
/* Brute-force enumeration; words longer than max_word_length are refused. */
REGAMB_API regamb_status regamb_oracle_enumerate(const regamb_regex* r, const char* word,
                                                 size_t max_word_length, regamb_strings** out);

/* max_states == 0 selects the default limit. */
REGAMB_API regamb_status regamb_fst_build(const regamb_regex* r, regamb_policy policy,
                                          size_t max_states, regamb_fst** out);
REGAMB_API void regamb_fst_free(regamb_fst* t);
REGAMB_API size_t regamb_fst_state_count(const regamb_fst* t);
REGAMB_API regamb_status regamb_fst_parse_all(const regamb_fst* t, const char* word,
                                              regamb_strings** out);
/* *out is NULL when the word does not match. */
REGAMB_API regamb_status regamb_fst_parse_first(const regamb_fst* t, const char* word,
                                                char** out);
REGAMB_API regamb_status regamb_fst_dot(const regamb_fst* t, int show_sink, char** out);

REGAMB_API regamb_status regamb_analyze(const regamb_regex* r, size_t max_states,
                                        regamb_report** out);
REGAMB_API void regamb_report_free(regamb_report* report);
REGAMB_API regamb_verdict regamb_report_verdict(const regamb_report* report);
REGAMB_API regamb_status regamb_report_render(const regamb_report* report, regamb_format format,
                                              char** out);

REGAMB_API size_t regamb_strings_count(const regamb_strings* s);
REGAMB_API const char* regamb_strings_at(const regamb_strings* s, size_t i);
REGAMB_API void regamb_strings_free(regamb_strings* s);

#ifdef __cplusplus
}
#endif

#endif /* REGAMB_REGAMB_H_ */
