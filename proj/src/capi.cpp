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

#include "hpi/hpi.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "hpi/error.hpp"
#include "hpi/lang.hpp"
#include "hpi/synthesis.hpp"
#include "hpi/translate.hpp"
#include "hpi/words.hpp"

struct hpi_type {
  hpi::TypeRef t;
};
struct hpi_term {
  hpi::TermRef c;
};
struct hpi_matrix {
  hpi::ExactMatrix m;
};
struct hpi_word {
  hpi::Word w;
};
struct hpi_report {
  hpi::TranslationReport r;
};
struct hpi_catalog {
  std::vector<hpi::Relation> rels;
};
struct hpi_verification {
  std::vector<hpi::RelationReport> rows;
};

namespace {

thread_local std::string last_error;

hpi_status status_of(hpi::ErrorCode code) {
  using hpi::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return HPI_ERR_PARSE;
    case ErrorCode::Type: return HPI_ERR_TYPE;
    case ErrorCode::Domain: return HPI_ERR_DOMAIN;
    case ErrorCode::Index: return HPI_ERR_INDEX;
    case ErrorCode::Dimension: return HPI_ERR_DIMENSION;
    case ErrorCode::Step: return HPI_ERR_STEP;
    case ErrorCode::Unsupported: return HPI_ERR_UNSUPPORTED;
    case ErrorCode::Internal: return HPI_ERR_INTERNAL;
  }
  return HPI_ERR_INTERNAL;
}

hpi_status bad_argument(const char* what) {
  last_error = std::string("invalid argument: ") + what;
  return HPI_ERR_ARGUMENT;
}

template <class F>
hpi_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return HPI_OK;
  } catch (const hpi::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return HPI_ERR_INTERNAL;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.data(), s.size() + 1);
  return p;
}

bool lang_of(hpi_lang l, hpi::Lang& out) {
  switch (l) {
    case HPI_LANG_PI: out = hpi::Lang::Pi; return true;
    case HPI_LANG_QPI: out = hpi::Lang::QPi; return true;
    case HPI_LANG_HPI: out = hpi::Lang::HPi; return true;
  }
  return false;
}

void emit_report(hpi::TranslationReport r, hpi_report** report) {
  if (report) *report = new hpi_report{std::move(r)};
}

}  // namespace

extern "C" {

const char* hpi_version(void) { return "0.1.0"; }

const char* hpi_status_name(hpi_status s) {
  switch (s) {
    case HPI_OK: return "ok";
    case HPI_ERR_PARSE: return "parse error";
    case HPI_ERR_TYPE: return "type error";
    case HPI_ERR_DOMAIN: return "domain error";
    case HPI_ERR_INDEX: return "index error";
    case HPI_ERR_DIMENSION: return "dimension error";
    case HPI_ERR_STEP: return "step error";
    case HPI_ERR_UNSUPPORTED: return "unsupported";
    case HPI_ERR_INTERNAL: return "internal error";
    case HPI_ERR_ARGUMENT: return "invalid argument";
  }
  return "unknown status";
}

const char* hpi_last_error(void) { return last_error.c_str(); }

void hpi_string_free(char* s) { std::free(s); }

hpi_status hpi_lang_parse(const char* text, hpi_lang* out) {
  if (!text || !out) return bad_argument("null pointer");
  return guarded([&] {
    switch (hpi::parse_lang(text)) {
      case hpi::Lang::Pi: *out = HPI_LANG_PI; break;
      case hpi::Lang::QPi: *out = HPI_LANG_QPI; break;
      case hpi::Lang::HPi: *out = HPI_LANG_HPI; break;
    }
  });
}

// types

hpi_status hpi_type_parse(const char* text, hpi_type** out) {
  if (!text || !out) return bad_argument("null pointer");
  return guarded([&] { *out = new hpi_type{hpi::parse_type(text)}; });
}

void hpi_type_free(hpi_type* t) { delete t; }

hpi_status hpi_type_to_string(const hpi_type* t, char** out) {
  if (!t || !out) return bad_argument("null pointer");
  return guarded([&] { *out = dup(hpi::to_string(*t->t)); });
}

hpi_status hpi_type_hdim(const hpi_type* t, size_t* out) {
  if (!t || !out) return bad_argument("null pointer");
  return guarded([&] { *out = hpi::hdim(*t->t); });
}

// terms

hpi_status hpi_term_parse(const char* text, hpi_lang lang, hpi_term** out) {
  hpi::Lang l;
  if (!text || !out) return bad_argument("null pointer");
  if (!lang_of(lang, l)) return bad_argument("language");
  return guarded([&] { *out = new hpi_term{hpi::parse_term(text, l)}; });
}

void hpi_term_free(hpi_term* c) { delete c; }

hpi_status hpi_term_to_string(const hpi_term* c, char** out) {
  if (!c || !out) return bad_argument("null pointer");
  return guarded([&] { *out = dup(hpi::to_string(*c->c)); });
}

hpi_status hpi_term_in_lang(const hpi_term* c, hpi_lang lang, int* out) {
  hpi::Lang l;
  if (!c || !out) return bad_argument("null pointer");
  if (!lang_of(lang, l)) return bad_argument("language");
  return guarded([&] { *out = hpi::in_language(*c->c, l) ? 1 : 0; });
}

hpi_status hpi_term_check(const hpi_term* c, const hpi_type* input, hpi_type** src,
                          hpi_type** dst) {
  if (!c || !input) return bad_argument("null pointer");
  return guarded([&] {
    const hpi::CombinatorType ct = hpi::typecheck(*c->c, input->t);
    if (src) *src = new hpi_type{ct.src};
    if (dst) *dst = new hpi_type{ct.dst};
  });
}

hpi_status hpi_term_sem(const hpi_term* c, const hpi_type* input, hpi_matrix** out) {
  if (!c || !input || !out) return bad_argument("null pointer");
  return guarded([&] { *out = new hpi_matrix{hpi::sem(*c->c, input->t)}; });
}

hpi_status hpi_term_equiv(const hpi_term* a, const hpi_term* b, const hpi_type* input,
                          int* equal) {
  if (!a || !b || !input || !equal) return bad_argument("null pointer");
  return guarded([&] { *equal = hpi::equiv_terms(*a->c, *b->c, input->t) ? 1 : 0; });
}

// matrices

hpi_status hpi_matrix_parse(const char* text, hpi_matrix** out) {
  if (!text || !out) return bad_argument("null pointer");
  return guarded([&] { *out = new hpi_matrix{hpi::parse_matrix(text)}; });
}

void hpi_matrix_free(hpi_matrix* m) { delete m; }

hpi_status hpi_matrix_to_text(const hpi_matrix* m, char** out) {
  if (!m || !out) return bad_argument("null pointer");
  return guarded([&] { *out = dup(hpi::to_text(m->m)); });
}

hpi_status hpi_matrix_to_float_text(const hpi_matrix* m, char** out) {
  if (!m || !out) return bad_argument("null pointer");
  return guarded([&] { *out = dup(hpi::to_float_text(m->m)); });
}

hpi_status hpi_matrix_dim(const hpi_matrix* m, size_t* out) {
  if (!m || !out) return bad_argument("null pointer");
  *out = m->m.dim();
  return HPI_OK;
}

hpi_status hpi_matrix_equal(const hpi_matrix* a, const hpi_matrix* b, int* equal) {
  if (!a || !b || !equal) return bad_argument("null pointer");
  return guarded([&] { *equal = a->m == b->m ? 1 : 0; });
}

hpi_status hpi_matrix_is_orthogonal(const hpi_matrix* m, int* out) {
  if (!m || !out) return bad_argument("null pointer");
  return guarded([&] { *out = hpi::is_orthogonal(m->m) ? 1 : 0; });
}

// words

hpi_status hpi_word_parse(const char* text, hpi_word** out) {
  if (!text || !out) return bad_argument("null pointer");
  return guarded([&] { *out = new hpi_word{hpi::parse_word(text)}; });
}

void hpi_word_free(hpi_word* w) { delete w; }

hpi_status hpi_word_to_string(const hpi_word* w, char** out) {
  if (!w || !out) return bad_argument("null pointer");
  return guarded([&] { *out = dup(hpi::tokens_to_string(w->w)); });
}

hpi_status hpi_word_to_text(const hpi_word* w, char** out) {
  if (!w || !out) return bad_argument("null pointer");
  return guarded([&] { *out = dup(hpi::to_text(w->w)); });
}

hpi_status hpi_word_dim(const hpi_word* w, size_t* out) {
  if (!w || !out) return bad_argument("null pointer");
  *out = w->w.n;
  return HPI_OK;
}

hpi_status hpi_word_sem(const hpi_word* w, hpi_matrix** out) {
  if (!w || !out) return bad_argument("null pointer");
  return guarded([&] { *out = new hpi_matrix{hpi::word_sem(w->w)}; });
}

hpi_status hpi_word_equiv(const hpi_word* a, const hpi_word* b, int* equal) {
  if (!a || !b || !equal) return bad_argument("null pointer");
  return guarded([&] { *equal = hpi::words_equiv(a->w, b->w) ? 1 : 0; });
}

// synthesis

hpi_status hpi_synthesize(const hpi_matrix* m, hpi_word** word, char** trace) {
  if (!m || !word) return bad_argument("null pointer");
  return guarded([&] {
    const hpi::SynthesisTrace t = hpi::synthesize(m->m);
    auto w = std::make_unique<hpi_word>(hpi_word{hpi::normal_form_word(t)});
    if (trace) *trace = dup(hpi::trace_to_text(t));
    *word = w.release();
  });
}

// translations

hpi_status hpi_translate_wsem(const hpi_term* c, const hpi_type* input, hpi_word** out,
                              hpi_report** report) {
  if (!c || !input || !out) return bad_argument("null pointer");
  return guarded([&] {
    auto w = std::make_unique<hpi_word>(hpi_word{hpi::wsem(*c->c, input->t)});
    emit_report(hpi::report_wsem(c->c, input->t), report);
    *out = w.release();
  });
}

hpi_status hpi_translate_t_q(const hpi_word* w, hpi_term** out, hpi_report** report) {
  if (!w || !out) return bad_argument("null pointer");
  return guarded([&] {
    auto t = std::make_unique<hpi_term>(hpi_term{hpi::t_q(w->w)});
    emit_report(hpi::report_t_q(w->w), report);
    *out = t.release();
  });
}

hpi_status hpi_translate_qsem(const hpi_term* c, const hpi_type* input, hpi_term** out,
                              hpi_report** report) {
  if (!c || !input || !out) return bad_argument("null pointer");
  return guarded([&] {
    auto t = std::make_unique<hpi_term>(hpi_term{hpi::qsem(c->c)});
    emit_report(hpi::report_qsem(c->c, input->t), report);
    *out = t.release();
  });
}

hpi_status hpi_translate_t_h(const hpi_term* c, const hpi_type* input, hpi_term** out,
                             hpi_report** report) {
  if (!c || !input || !out) return bad_argument("null pointer");
  return guarded([&] {
    auto t = std::make_unique<hpi_term>(hpi_term{hpi::t_h(c->c, input->t)});
    emit_report(hpi::report_t_h(c->c, input->t), report);
    *out = t.release();
  });
}

hpi_status hpi_roundtrip_check(const hpi_term* c, const hpi_type* input, hpi_report** report) {
  if (!c || !input || !report) return bad_argument("null pointer");
  return guarded([&] { emit_report(hpi::roundtrip_check(c->c, input->t), report); });
}

void hpi_report_free(hpi_report* r) { delete r; }

hpi_status hpi_report_holds(const hpi_report* r, int* out) {
  if (!r || !out) return bad_argument("null pointer");
  *out = r->r.holds ? 1 : 0;
  return HPI_OK;
}

hpi_status hpi_report_verdict(const hpi_report* r, char** out) {
  if (!r || !out) return bad_argument("null pointer");
  return guarded([&] { *out = dup(r->r.verdict()); });
}

hpi_status hpi_report_to_text(const hpi_report* r, char** out) {
  if (!r || !out) return bad_argument("null pointer");
  return guarded([&] { *out = dup(r->r.to_text()); });
}

// catalog

hpi_status hpi_catalog_builtin(hpi_catalog** out) {
  if (!out) return bad_argument("null pointer");
  return guarded([&] { *out = new hpi_catalog{hpi::relation_catalog()}; });
}

hpi_status hpi_catalog_parse(const char* text, hpi_catalog** out) {
  if (!text || !out) return bad_argument("null pointer");
  return guarded([&] { *out = new hpi_catalog{hpi::parse_catalog(text)}; });
}

void hpi_catalog_free(hpi_catalog* c) { delete c; }

hpi_status hpi_catalog_size(const hpi_catalog* c, size_t* out) {
  if (!c || !out) return bad_argument("null pointer");
  *out = c->rels.size();
  return HPI_OK;
}

hpi_status hpi_catalog_to_text(const hpi_catalog* c, char** out) {
  if (!c || !out) return bad_argument("null pointer");
  return guarded([&] { *out = dup(hpi::catalog_to_text(c->rels)); });
}

hpi_status hpi_catalog_verify(const hpi_catalog* c, size_t n, uint64_t max_assignments,
                              hpi_verification** out) {
  if (!c || !out) return bad_argument("null pointer");
  return guarded([&] {
    *out = new hpi_verification{
        hpi::verify_catalog(c->rels, n, static_cast<size_t>(max_assignments))};
  });
}

void hpi_verification_free(hpi_verification* v) { delete v; }

hpi_status hpi_verification_size(const hpi_verification* v, size_t* out) {
  if (!v || !out) return bad_argument("null pointer");
  *out = v->rows.size();
  return HPI_OK;
}

hpi_status hpi_verification_entry(const hpi_verification* v, size_t i, const char** id,
                                  hpi_check_status* status, uint64_t* checked,
                                  uint64_t* failed, const char** note) {
  if (!v) return bad_argument("null pointer");
  if (i >= v->rows.size()) {
    last_error = "verification entry " + std::to_string(i) + " out of range";
    return HPI_ERR_INDEX;
  }
  const hpi::RelationReport& r = v->rows[i];
  if (id) *id = r.id.c_str();
  if (status) {
    switch (r.status) {
      case hpi::RelationReport::Status::Pass: *status = HPI_CHECK_PASS; break;
      case hpi::RelationReport::Status::Fail: *status = HPI_CHECK_FAIL; break;
      case hpi::RelationReport::Status::Skipped: *status = HPI_CHECK_SKIPPED; break;
    }
  }
  if (checked) *checked = r.checked;
  if (failed) *failed = r.failed;
  if (note) *note = r.note.c_str();
  return HPI_OK;
}

// derivations

hpi_status hpi_derive_check(const hpi_word* from, const char* steps, const hpi_word* to,
                            int check_semantics, int* holds) {
  if (!from || !steps || !to || !holds) return bad_argument("null pointer");
  return guarded([&] {
    const auto parsed = hpi::parse_derivation(steps);
    *holds = hpi::check_derivation(from->w, parsed, to->w, check_semantics != 0) ? 1 : 0;
  });
}

}  // extern "C"
