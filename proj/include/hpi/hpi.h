// Copyright 2026 The hpi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// C interface to libhpi.
//
// Every function returns an hpi_status. On failure the message is available
// from hpi_last_error() on the calling thread until the next call. Strings
// returned through char** are owned by the caller and released with
// hpi_string_free; handles are released with their matching *_free.

#ifndef HPI_HPI_H_
#define HPI_HPI_H_

#include <stddef.h>
#include <stdint.h>

#if defined(HPI_BUILDING_LIBRARY)
#define HPI_API __attribute__((visibility("default")))
#else
#define HPI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hpi_status {
  HPI_OK = 0,
  HPI_ERR_PARSE = 1,
  HPI_ERR_TYPE = 2,
  HPI_ERR_DOMAIN = 3,
  HPI_ERR_INDEX = 4,
  HPI_ERR_DIMENSION = 5,
  HPI_ERR_STEP = 6,
  HPI_ERR_UNSUPPORTED = 7,
  HPI_ERR_INTERNAL = 8,
  HPI_ERR_ARGUMENT = 9,  // null pointer or bad enum value
} hpi_status;

typedef enum hpi_lang { HPI_LANG_PI = 0, HPI_LANG_QPI = 1, HPI_LANG_HPI = 2 } hpi_lang;

typedef struct hpi_type hpi_type;
typedef struct hpi_term hpi_term;
typedef struct hpi_matrix hpi_matrix;
typedef struct hpi_word hpi_word;
typedef struct hpi_report hpi_report;
typedef struct hpi_catalog hpi_catalog;
typedef struct hpi_verification hpi_verification;

HPI_API const char* hpi_version(void);
HPI_API const char* hpi_status_name(hpi_status s);
HPI_API const char* hpi_last_error(void);
HPI_API void hpi_string_free(char* s);
HPI_API hpi_status hpi_lang_parse(const char* text, hpi_lang* out);

// types
HPI_API hpi_status hpi_type_parse(const char* text, hpi_type** out);
HPI_API void hpi_type_free(hpi_type* t);
HPI_API hpi_status hpi_type_to_string(const hpi_type* t, char** out);
HPI_API hpi_status hpi_type_hdim(const hpi_type* t, size_t* out);

// terms
HPI_API hpi_status hpi_term_parse(const char* text, hpi_lang lang, hpi_term** out);
HPI_API void hpi_term_free(hpi_term* c);
HPI_API hpi_status hpi_term_to_string(const hpi_term* c, char** out);
HPI_API hpi_status hpi_term_in_lang(const hpi_term* c, hpi_lang lang, int* out);
/// src/dst may be null when not wanted.
HPI_API hpi_status hpi_term_check(const hpi_term* c, const hpi_type* input, hpi_type** src,
                                  hpi_type** dst);
HPI_API hpi_status hpi_term_sem(const hpi_term* c, const hpi_type* input, hpi_matrix** out);
/// *equal is 1 when both terms denote the same matrix at `input`.
HPI_API hpi_status hpi_term_equiv(const hpi_term* a, const hpi_term* b, const hpi_type* input,
                                  int* equal);

// matrices, in the dim / lde / rows text format
HPI_API hpi_status hpi_matrix_parse(const char* text, hpi_matrix** out);
HPI_API void hpi_matrix_free(hpi_matrix* m);
HPI_API hpi_status hpi_matrix_to_text(const hpi_matrix* m, char** out);
/// Decimal approximation, for inspection only.
HPI_API hpi_status hpi_matrix_to_float_text(const hpi_matrix* m, char** out);
HPI_API hpi_status hpi_matrix_dim(const hpi_matrix* m, size_t* out);
HPI_API hpi_status hpi_matrix_equal(const hpi_matrix* a, const hpi_matrix* b, int* equal);
HPI_API hpi_status hpi_matrix_is_orthogonal(const hpi_matrix* m, int* out);

// words over Z[a], X[a,b], H[a,b]
HPI_API hpi_status hpi_word_parse(const char* text, hpi_word** out);
HPI_API void hpi_word_free(hpi_word* w);
/// Generators only, "ε" for the empty word.
HPI_API hpi_status hpi_word_to_string(const hpi_word* w, char** out);
/// "n=<n>" header line followed by the generators.
HPI_API hpi_status hpi_word_to_text(const hpi_word* w, char** out);
HPI_API hpi_status hpi_word_dim(const hpi_word* w, size_t* out);
HPI_API hpi_status hpi_word_sem(const hpi_word* w, hpi_matrix** out);
HPI_API hpi_status hpi_word_equiv(const hpi_word* a, const hpi_word* b, int* equal);

// synthesis
/// Normal-form word of an orthogonal matrix. trace may be null; otherwise it
/// receives one syllable per line with its level annotation.
HPI_API hpi_status hpi_synthesize(const hpi_matrix* m, hpi_word** word, char** trace);

// translations; each also yields a report that re-checks the semantics
HPI_API hpi_status hpi_translate_wsem(const hpi_term* c, const hpi_type* input, hpi_word** out,
                                      hpi_report** report);
HPI_API hpi_status hpi_translate_t_q(const hpi_word* w, hpi_term** out, hpi_report** report);
HPI_API hpi_status hpi_translate_qsem(const hpi_term* c, const hpi_type* input, hpi_term** out,
                                      hpi_report** report);
HPI_API hpi_status hpi_translate_t_h(const hpi_term* c, const hpi_type* input, hpi_term** out,
                                     hpi_report** report);
HPI_API hpi_status hpi_roundtrip_check(const hpi_term* c, const hpi_type* input,
                                       hpi_report** report);
HPI_API void hpi_report_free(hpi_report* r);
HPI_API hpi_status hpi_report_holds(const hpi_report* r, int* out);
HPI_API hpi_status hpi_report_verdict(const hpi_report* r, char** out);
HPI_API hpi_status hpi_report_to_text(const hpi_report* r, char** out);

// relation catalog
HPI_API hpi_status hpi_catalog_builtin(hpi_catalog** out);
HPI_API hpi_status hpi_catalog_parse(const char* text, hpi_catalog** out);
HPI_API void hpi_catalog_free(hpi_catalog* c);
HPI_API hpi_status hpi_catalog_size(const hpi_catalog* c, size_t* out);
HPI_API hpi_status hpi_catalog_to_text(const hpi_catalog* c, char** out);

typedef enum hpi_check_status {
  HPI_CHECK_PASS = 0,
  HPI_CHECK_FAIL = 1,
  HPI_CHECK_SKIPPED = 2,
} hpi_check_status;

/// max_assignments = 0 means every injective assignment.
HPI_API hpi_status hpi_catalog_verify(const hpi_catalog* c, size_t n, uint64_t max_assignments,
                                      hpi_verification** out);
HPI_API void hpi_verification_free(hpi_verification* v);
HPI_API hpi_status hpi_verification_size(const hpi_verification* v, size_t* out);
/// Borrowed strings, valid until the verification is freed. note is "" when
/// there is nothing to add.
HPI_API hpi_status hpi_verification_entry(const hpi_verification* v, size_t i, const char** id,
                                          hpi_check_status* status, uint64_t* checked,
                                          uint64_t* failed, const char** note);

// derivations
/// *holds is 1 when the steps rewrite `from` into `to` token for token.
/// A step that does not apply is reported as HPI_ERR_STEP.
HPI_API hpi_status hpi_derive_check(const hpi_word* from, const char* steps, const hpi_word* to,
                                    int check_semantics, int* holds);

#ifdef __cplusplus
}
#endif

#endif  // HPI_HPI_H_
