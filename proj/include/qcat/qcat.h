// Copyright 2026 The qcat Authors
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

/* C interface to the qcat checkers. All functions are thread-safe as long as
 * handles are not shared between threads; error messages are kept per
 * thread. Strings returned through char** are owned by the caller and must
 * be released with qcat_string_free. */
#ifndef QCAT_QCAT_H
#define QCAT_QCAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(QCAT_BUILDING_LIBRARY)
#define QCAT_API __attribute__((visibility("default")))
#else
#define QCAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qcat_status {
  QCAT_OK = 0,
  QCAT_NEGATIVE = 1,          /* the run completed and some verdict failed */
  QCAT_ERR_STRUCTURE = 2,     /* malformed document or table */
  QCAT_ERR_USAGE = 3,         /* unknown command, missing input, wrong kind */
  QCAT_ERR_PRECONDITION = 4,  /* input outside the operation's domain */
  QCAT_ERR_BOUND = 5,         /* enumeration bound exceeded */
  QCAT_ERR_INTERNAL = 6,
  QCAT_ERR_ARGUMENT = 7       /* bad flag value or null pointer */
} qcat_status;

typedef struct qcat_document qcat_document;
typedef struct qcat_report qcat_report;

/* Flag values for qcat_run. Rationals are strings such as "1/2"; NULL
 * leaves the command default. */
typedef struct qcat_options {
  const char* const* sets; /* each a comma-separated list of names */
  size_t set_count;
  const char* step;
  const char* cap;
  const char* eps;
  uint64_t bound; /* 0: command default */
  uint64_t horizon; /* 0: sequence default */
} qcat_options;

QCAT_API void qcat_options_init(qcat_options* options);

QCAT_API const char* qcat_version(void);
/* Message of the last failed call on this thread ("" if none). */
QCAT_API const char* qcat_last_error(void);
QCAT_API const char* qcat_status_name(qcat_status status);

QCAT_API qcat_status qcat_document_parse(const char* text, size_t length, qcat_document** out);
/* Reads a document file; a path that does not exist but names a fixture
 * loads the fixture. */
QCAT_API qcat_status qcat_document_load(const char* path, qcat_document** out);
QCAT_API qcat_status qcat_document_emit(const qcat_document* doc, char** out);
QCAT_API const char* qcat_document_kind(const qcat_document* doc);
QCAT_API const char* qcat_document_name(const qcat_document* doc);
QCAT_API const char* qcat_document_source(const qcat_document* doc);
QCAT_API void qcat_document_free(qcat_document* doc);

QCAT_API qcat_status qcat_fixture(const char* name, qcat_document** out);
QCAT_API size_t qcat_fixture_count(void);
QCAT_API const char* qcat_fixture_name(size_t index);

QCAT_API size_t qcat_command_count(void);
QCAT_API const char* qcat_command_name(size_t index);

/* Runs a command. Returns QCAT_OK or QCAT_NEGATIVE with *out set, or an
 * error status with *out left NULL. */
QCAT_API qcat_status qcat_run(const char* command, const qcat_document* const* inputs, size_t input_count,
                              const qcat_options* options, qcat_report** out);
QCAT_API int qcat_report_positive(const qcat_report* report);
/* 0 all verdicts positive, 1 some negative. */
QCAT_API int qcat_report_exit_code(const qcat_report* report);
QCAT_API qcat_status qcat_report_json(const qcat_report* report, char** out);
QCAT_API qcat_status qcat_report_text(const qcat_report* report, char** out);
QCAT_API void qcat_report_free(qcat_report* report);

QCAT_API void qcat_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* QCAT_QCAT_H */
