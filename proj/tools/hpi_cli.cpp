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

// hpi: command-line front end over libhpi.
//
// Exit codes: 0 success / equivalent, 1 domain failure, 2 usage or parse error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hpi/hpi.h"

namespace {

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using Type = std::unique_ptr<hpi_type, Deleter<hpi_type, hpi_type_free>>;
using Term = std::unique_ptr<hpi_term, Deleter<hpi_term, hpi_term_free>>;
using Matrix = std::unique_ptr<hpi_matrix, Deleter<hpi_matrix, hpi_matrix_free>>;
using WordH = std::unique_ptr<hpi_word, Deleter<hpi_word, hpi_word_free>>;
using Report = std::unique_ptr<hpi_report, Deleter<hpi_report, hpi_report_free>>;
using Catalog = std::unique_ptr<hpi_catalog, Deleter<hpi_catalog, hpi_catalog_free>>;
using Verification =
    std::unique_ptr<hpi_verification, Deleter<hpi_verification, hpi_verification_free>>;

/// Thrown to unwind to main with an exit code; the message is already printed.
struct Exit {
  int code;
};

int exit_code(hpi_status s) {
  switch (s) {
    case HPI_OK: return 0;
    case HPI_ERR_PARSE:
    case HPI_ERR_ARGUMENT:
    case HPI_ERR_UNSUPPORTED: return 2;
    default: return 1;
  }
}

void check(hpi_status s) {
  if (s == HPI_OK) return;
  std::cerr << "error: " << hpi_last_error() << "\n";
  throw Exit{exit_code(s)};
}

[[noreturn]] void usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  throw Exit{2};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  hpi_string_free(s);
  return out;
}

/// `-` reads stdin, an existing file is read whole, anything else is inline.
std::string read_input(const std::string& arg) {
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) usage_error("cannot read " + arg);
    return {std::istreambuf_iterator<char>(in), {}};
  }
  return arg;
}

hpi_lang lang_of(const std::string& name) {
  hpi_lang l;
  check(hpi_lang_parse(name.c_str(), &l));
  return l;
}

Type parse_type(const std::string& text) {
  hpi_type* t = nullptr;
  check(hpi_type_parse(text.c_str(), &t));
  return Type(t);
}

Term parse_term(const std::string& text, hpi_lang lang) {
  hpi_term* c = nullptr;
  check(hpi_term_parse(text.c_str(), lang, &c));
  return Term(c);
}

WordH parse_word(const std::string& text) {
  hpi_word* w = nullptr;
  check(hpi_word_parse(text.c_str(), &w));
  return WordH(w);
}

Matrix parse_matrix(const std::string& text) {
  hpi_matrix* m = nullptr;
  check(hpi_matrix_parse(text.c_str(), &m));
  return Matrix(m);
}

std::string type_text(const hpi_type* t) {
  char* s = nullptr;
  check(hpi_type_to_string(t, &s));
  return take(s);
}

std::string term_text(const hpi_term* c) {
  char* s = nullptr;
  check(hpi_term_to_string(c, &s));
  return take(s);
}

std::string word_tokens(const hpi_word* w) {
  char* s = nullptr;
  check(hpi_word_to_string(w, &s));
  return take(s);
}

std::string word_text(const hpi_word* w) {
  char* s = nullptr;
  check(hpi_word_to_text(w, &s));
  return take(s);
}

std::string matrix_text(const hpi_matrix* m) {
  char* s = nullptr;
  check(hpi_matrix_to_text(m, &s));
  return take(s);
}

/// Without --in-type the input is 1+1, falling back to 1 when the term does
/// not accept 1+1.
Type input_type(const hpi_term* c, const std::string& given) {
  if (!given.empty()) return parse_type(given);
  hpi_status last = HPI_OK;
  for (const char* candidate : {"1+1", "1"}) {
    Type t = parse_type(candidate);
    last = hpi_term_check(c, t.get(), nullptr, nullptr);
    if (last == HPI_OK) return t;
    if (last != HPI_ERR_TYPE) break;
  }
  check(hpi_term_check(c, parse_type("1+1").get(), nullptr, nullptr));
  check(last);
  return parse_type("1+1");
}

Matrix term_sem(const hpi_term* c, const hpi_type* t) {
  hpi_matrix* m = nullptr;
  check(hpi_term_sem(c, t, &m));
  return Matrix(m);
}

WordH synthesize(const hpi_matrix* m, std::string* trace = nullptr) {
  hpi_word* w = nullptr;
  char* tr = nullptr;
  check(hpi_synthesize(m, &w, trace ? &tr : nullptr));
  if (trace) *trace = take(tr);
  return WordH(w);
}

std::string report_line(const hpi_report* r, bool* holds) {
  int h = 0;
  char* v = nullptr;
  check(hpi_report_holds(r, &h));
  check(hpi_report_verdict(r, &v));
  *holds = h != 0;
  return take(v);
}

struct Options {
  std::string input, input2, in_type, lang = "qpi", kind, from, to, steps;
  bool float_out = false, trace = false, semantic = false;
  size_t n = 6;
  uint64_t max_assignments = 0;
  std::string catalog;
};

int cmd_check(const Options& o) {
  const Term c = parse_term(read_input(o.input), lang_of(o.lang));
  const Type in = input_type(c.get(), o.in_type);
  hpi_type *src = nullptr, *dst = nullptr;
  check(hpi_term_check(c.get(), in.get(), &src, &dst));
  const Type s(src), d(dst);
  std::cout << type_text(s.get()) << " <-> " << type_text(d.get()) << "\n";
  return 0;
}

int cmd_sem(const Options& o) {
  const Term c = parse_term(read_input(o.input), lang_of(o.lang));
  const Type in = input_type(c.get(), o.in_type);
  const Matrix m = term_sem(c.get(), in.get());
  std::cout << matrix_text(m.get());
  if (o.float_out) {
    char* s = nullptr;
    check(hpi_matrix_to_float_text(m.get(), &s));
    std::cout << take(s);
  }
  return 0;
}

int cmd_synth(const Options& o) {
  const Matrix m = parse_matrix(read_input(o.input));
  std::string trace;
  const WordH w = synthesize(m.get(), o.trace ? &trace : nullptr);
  if (o.trace) std::cout << trace;
  std::cout << word_tokens(w.get()) << "\n";
  return 0;
}

/// Normal form of a word, a term at its input type, or a matrix.
WordH normal_form(const std::string& text, const Options& o) {
  if (o.kind == "matrix") return synthesize(parse_matrix(text).get());
  if (o.kind == "term") {
    const Term c = parse_term(text, lang_of(o.lang));
    const Type in = input_type(c.get(), o.in_type);
    return synthesize(term_sem(c.get(), in.get()).get());
  }
  const WordH w = parse_word(text);
  hpi_matrix* m = nullptr;
  check(hpi_word_sem(w.get(), &m));
  return synthesize(Matrix(m).get());
}

int cmd_normalize(const Options& o) {
  std::cout << word_text(normal_form(read_input(o.input), o).get());
  return 0;
}

int cmd_equiv(const Options& o) {
  const std::string a = read_input(o.input), b = read_input(o.input2);
  Matrix ma, mb;
  if (o.kind == "word") {
    const WordH wa = parse_word(a), wb = parse_word(b);
    size_t na = 0, nb = 0;
    check(hpi_word_dim(wa.get(), &na));
    check(hpi_word_dim(wb.get(), &nb));
    if (na != nb)
      usage_error("incompatible words: n=" + std::to_string(na) + " vs n=" + std::to_string(nb));
    hpi_matrix* m = nullptr;
    check(hpi_word_sem(wa.get(), &m));
    ma.reset(m);
    check(hpi_word_sem(wb.get(), &m));
    mb.reset(m);
  } else {
    const hpi_lang lang = lang_of(o.lang);
    const Term ca = parse_term(a, lang), cb = parse_term(b, lang);
    const Type in = input_type(ca.get(), o.in_type);
    hpi_type *da = nullptr, *db = nullptr;
    check(hpi_term_check(ca.get(), in.get(), nullptr, &da));
    const Type dta(da);
    check(hpi_term_check(cb.get(), in.get(), nullptr, &db));
    const Type dtb(db);
    if (type_text(dta.get()) != type_text(dtb.get()))
      usage_error("incompatible terms: " + type_text(in.get()) + " <-> " +
                  type_text(dta.get()) + " vs " + type_text(in.get()) + " <-> " +
                  type_text(dtb.get()));
    ma = term_sem(ca.get(), in.get());
    mb = term_sem(cb.get(), in.get());
  }
  int equal = 0;
  check(hpi_matrix_equal(ma.get(), mb.get(), &equal));
  const WordH na = synthesize(ma.get()), nb = synthesize(mb.get());
  std::cout << (equal ? "EQUIV" : "DISTINCT") << "\n";
  std::cout << "nf1 " << word_tokens(na.get()) << "\n";
  std::cout << "nf2 " << word_tokens(nb.get()) << "\n";
  return equal ? 0 : 1;
}

int cmd_translate(const Options& o) {
  const std::string text = read_input(o.input);
  hpi_report* rep = nullptr;
  if ((o.from == "qpi" || o.from == "hpi") && (o.to == "words" || o.to == "hpi" || o.to == "qpi")) {
    const Term c = parse_term(text, lang_of(o.from));
    const Type in = input_type(c.get(), o.in_type);
    if (o.from == "qpi" && o.to == "words") {
      hpi_word* w = nullptr;
      check(hpi_translate_wsem(c.get(), in.get(), &w, &rep));
      std::cout << word_text(WordH(w).get());
    } else if (o.from == "qpi" && o.to == "hpi") {
      hpi_term* h = nullptr;
      check(hpi_translate_t_h(c.get(), in.get(), &h, &rep));
      std::cout << term_text(Term(h).get()) << "\n";
    } else if (o.from == "hpi" && o.to == "qpi") {
      hpi_term* q = nullptr;
      check(hpi_translate_qsem(c.get(), in.get(), &q, &rep));
      std::cout << term_text(Term(q).get()) << "\n";
    }
  } else if (o.from == "words" && (o.to == "qpi" || o.to == "term")) {
    WordH w = parse_word(text);
    // term: the canonical term, read back from the word's normal form
    if (o.to == "term") {
      hpi_matrix* m = nullptr;
      check(hpi_word_sem(w.get(), &m));
      w = synthesize(Matrix(m).get());
    }
    hpi_term* q = nullptr;
    check(hpi_translate_t_q(w.get(), &q, &rep));
    std::cout << term_text(Term(q).get()) << "\n";
  }
  if (!rep) usage_error("unsupported translation " + o.from + " -> " + o.to);
  const Report r(rep);
  bool holds = false;
  std::cout << report_line(r.get(), &holds) << "\n";
  return holds ? 0 : 1;
}

int cmd_relations_verify(const Options& o) {
  hpi_catalog* cat = nullptr;
  if (o.catalog.empty())
    check(hpi_catalog_builtin(&cat));
  else
    check(hpi_catalog_parse(read_input(o.catalog).c_str(), &cat));
  const Catalog c(cat);
  hpi_verification* ver = nullptr;
  check(hpi_catalog_verify(c.get(), o.n, o.max_assignments, &ver));
  const Verification v(ver);
  size_t count = 0, pass = 0, fail = 0, skipped = 0;
  check(hpi_verification_size(v.get(), &count));
  for (size_t i = 0; i < count; ++i) {
    const char *id = nullptr, *note = nullptr;
    hpi_check_status st;
    uint64_t checked = 0, failed = 0;
    check(hpi_verification_entry(v.get(), i, &id, &st, &checked, &failed, &note));
    std::cout << id << ' ';
    if (st == HPI_CHECK_PASS) {
      ++pass;
      std::cout << "PASS " << checked << "/" << checked;
    } else if (st == HPI_CHECK_FAIL) {
      ++fail;
      std::cout << "FAIL " << failed << "/" << checked << " failed";
    } else {
      ++skipped;
      std::cout << "SKIPPED";
    }
    if (*note) std::cout << " (" << note << ")";
    std::cout << "\n";
  }
  std::cout << "n=" << o.n << ": " << pass << " pass, " << fail << " fail, " << skipped
            << " skipped\n";
  return fail == 0 ? 0 : 1;
}

int cmd_derive_check(const Options& o) {
  const WordH from = parse_word(read_input(o.from)), to = parse_word(read_input(o.to));
  int holds = 0;
  check(hpi_derive_check(from.get(), read_input(o.steps).c_str(), to.get(), o.semantic ? 1 : 0,
                         &holds));
  std::cout << (holds ? "derivation OK" : "derivation does not reach the target word") << "\n";
  return holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolchain for Pi, Q-Pi and Hadamard-Pi"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hpi_version()));
  Options o;

  auto term_flags = [&](CLI::App* sub) {
    sub->add_option("--in-type", o.in_type, "input type (default 1+1, else 1)");
    sub->add_option("--lang", o.lang, "pi, qpi or hpi")->capture_default_str();
  };

  auto* check_cmd = app.add_subcommand("check", "typecheck a term");
  check_cmd->add_option("term", o.input, "term, file or -")->required();
  term_flags(check_cmd);

  auto* sem_cmd = app.add_subcommand("sem", "evaluate a term to an exact matrix");
  sem_cmd->add_option("term", o.input, "term, file or -")->required();
  sem_cmd->add_flag("--float", o.float_out, "also print a decimal approximation");
  term_flags(sem_cmd);

  auto* synth_cmd = app.add_subcommand("synth", "synthesize a matrix into its normal-form word");
  synth_cmd->add_option("matrix", o.input, "matrix text, file or -")->required();
  synth_cmd->add_flag("--trace", o.trace, "print syllables with levels");

  auto* norm_cmd = app.add_subcommand("normalize", "normal-form word of a word, term or matrix");
  norm_cmd->add_option("input", o.input, "input, file or -")->required();
  norm_cmd->add_option("--kind", o.kind, "word, term or matrix")
      ->check(CLI::IsMember({"word", "term", "matrix"}));
  term_flags(norm_cmd);

  auto* equiv_cmd = app.add_subcommand("equiv", "decide equivalence exactly");
  equiv_cmd->add_option("a", o.input, "first input")->required();
  equiv_cmd->add_option("b", o.input2, "second input")->required();
  equiv_cmd->add_option("--kind", o.kind, "term or word")->check(CLI::IsMember({"term", "word"}));
  term_flags(equiv_cmd);

  auto* tr_cmd = app.add_subcommand("translate", "translate between languages and words");
  tr_cmd->add_option("input", o.input, "input, file or -")->required();
  tr_cmd->add_option("--from", o.from, "hpi, qpi or words")
      ->required()
      ->check(CLI::IsMember({"hpi", "qpi", "words"}));
  tr_cmd->add_option("--to", o.to, "qpi, hpi, words or term")
      ->required()
      ->check(CLI::IsMember({"qpi", "hpi", "words", "term"}));
  tr_cmd->add_option("--in-type", o.in_type, "input type of a term source");

  auto* rel_cmd = app.add_subcommand("relations-verify", "check the relation catalog");
  rel_cmd->add_option("--n", o.n, "number of levels")->capture_default_str();
  rel_cmd->add_option("--max-assignments", o.max_assignments, "per relation, 0 = all")
      ->capture_default_str();
  rel_cmd->add_option("--catalog", o.catalog, "catalog file instead of the built-in one");

  auto* der_cmd = app.add_subcommand("derive-check", "check a derivation between two words");
  der_cmd->add_option("--from", o.from, "start word")->required();
  der_cmd->add_option("--to", o.to, "target word")->required();
  der_cmd->add_option("--steps", o.steps, "derivation steps, file or -")->required();
  der_cmd->add_flag("--semantic", o.semantic, "also compare semantics after each step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*check_cmd) return cmd_check(o);
    if (*sem_cmd) return cmd_sem(o);
    if (*synth_cmd) return cmd_synth(o);
    if (*norm_cmd) return cmd_normalize(o);
    if (*equiv_cmd) {
      if (o.kind.empty()) o.kind = "term";
      return cmd_equiv(o);
    }
    if (*tr_cmd) return cmd_translate(o);
    if (*rel_cmd) return cmd_relations_verify(o);
    if (*der_cmd) return cmd_derive_check(o);
  } catch (const Exit& e) {
    return e.code;
  }
  return 2;
}
