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

#include "hpi/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hpi/error.hpp"
#include "hpi/synthesis.hpp"

namespace hpi {

void validate(const Word& w) {
  for (const Generator& g : w.gens) validate(g, w.n);
}

ExactMatrix word_sem(const Word& w) {
  ExactMatrix m = ExactMatrix::identity(w.n);
  for (const Generator& g : w.gens) apply_right(m, g);
  return m;
}

Word concat(const Word& lhs, const Word& rhs) {
  if (lhs.n != rhs.n) fail(ErrorCode::Dimension, "concat: words over different G_n");
  Word out = lhs;
  out.gens.insert(out.gens.end(), rhs.gens.begin(), rhs.gens.end());
  return out;
}

Word reversed(const Word& w) {
  Word out = w;
  std::reverse(out.gens.begin(), out.gens.end());
  return out;
}

Word shift(const Word& w, size_t m) {
  Word out;
  out.n = w.n + m;
  out.gens.reserve(w.gens.size());
  const auto d = static_cast<unsigned>(m);
  for (Generator g : w.gens) {
    g.a += d;
    if (g.kind != GenKind::Z) g.b += d;
    out.gens.push_back(g);
  }
  return out;
}

Word embed(const Word& w, size_t new_n) {
  if (new_n < w.n) fail(ErrorCode::Dimension, "embed: target dimension is smaller");
  Word out = w;
  out.n = new_n;
  return out;
}

Word normalize_reversed(const Word& w) {
  Word out;
  out.n = w.n;
  for (const Generator& g : w.gens) {
    if (g.canonical()) {
      out.gens.push_back(g);
      continue;
    }
    const unsigned lo = g.b, hi = g.a;
    if (g.kind == GenKind::X) {
      out.gens.push_back(Generator::x(lo, hi));
    } else {
      out.gens.push_back(Generator::x(lo, hi));
      out.gens.push_back(Generator::h(lo, hi));
      out.gens.push_back(Generator::x(lo, hi));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text

std::string tokens_to_string(const Word& w) {
  if (w.gens.empty()) return "ε";
  std::string out;
  for (size_t i = 0; i < w.gens.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w.gens[i]);
  }
  return out;
}

std::string to_text(const Word& w) {
  return "n=" + std::to_string(w.n) + "\n" + tokens_to_string(w) + "\n";
}

namespace {

constexpr std::string_view kEpsilon = "\xCE\xB5";  // U+03B5

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_space() {
    while (pos_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[pos_])))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_space();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(std::string_view tok) {
    skip_space();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) error("expected '" + std::string(tok) + "'");
  }
  char get() {
    skip_space();
    if (pos_ >= s_.size()) error("unexpected end of input");
    return s_[pos_++];
  }
  unsigned number() {
    skip_space();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::Parse, what + " at offset " + std::to_string(pos_) + " in '" +
                               std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
};

GenKind kind_from_letter(char c, const Scanner& sc) {
  switch (c) {
    case 'Z': return GenKind::Z;
    case 'X': return GenKind::X;
    case 'H': return GenKind::H;
    default: sc.error(std::string("unknown generator '") + c + "'");
  }
}

}  // namespace

Word parse_word(std::string_view text) {
  Scanner sc(text);
  Word w;
  std::optional<size_t> declared;
  if (sc.accept("n=") || sc.accept("n =")) declared = sc.number();
  size_t max_index = 0;
  while (!sc.done()) {
    if (sc.accept(kEpsilon) || sc.accept("eps")) continue;
    Generator g;
    g.kind = kind_from_letter(sc.get(), sc);
    sc.expect("[");
    g.a = sc.number();
    if (g.kind != GenKind::Z) {
      sc.accept(",");
      g.b = sc.number();
    }
    sc.expect("]");
    max_index = std::max<size_t>(max_index, g.max_index());
    w.gens.push_back(g);
  }
  w.n = declared.value_or(max_index);
  validate(w);
  return normalize_reversed(w);
}

// ---------------------------------------------------------------------------
// Relation catalog

namespace {

constexpr std::string_view kBuiltinCatalog = R"(
a1: Z[a] Z[a] = ε
a2: X[a,b] X[a,b] = ε
a3: H[a,b] H[a,b] = ε
b1: Z[a] Z[b] = Z[b] Z[a]
b2: Z[a] X[b,c] = X[b,c] Z[a]
b3: X[a,b] X[c,d] = X[c,d] X[a,b]
b4: Z[a] H[b,c] = H[b,c] Z[a]
b5: X[a,b] H[c,d] = H[c,d] X[a,b]
b6: H[a,b] H[c,d] = H[c,d] H[a,b]
c1: Z[a] X[a,b] = X[a,b] Z[b]
c2: X[b,c] X[a,b] = X[a,b] X[a,c]
c3: X[a,c] X[b,c] = X[b,c] X[a,b]
c4: H[b,c] X[a,b] = X[a,b] H[a,c]
c5: H[a,c] X[b,c] = X[b,c] H[a,b]
d1: Z[a] Z[b] H[a,b] = H[a,b] Z[a] Z[b]
d2: Z[b] H[a,b] = H[a,b] X[a,b]
d3: (H[c,d] H[a,c] H[b,d])^4 = H[a,b] H[c,d]
d4: (H[a,c] H[b,d] H[a,b] H[a,c] H[b,d] X[c,e] X[d,f])^3 = H[c,e] H[d,f] H[e,f] H[c,e] H[d,f] X[c,e] X[d,f]
e1: X[c,b] = X[b,c]
e2: H[c,b] = X[b,c] H[b,c] X[b,c]
f1: (H[a,b] H[c,d] H[a,c] H[b,d])^2 = ε
f2: (H[a,c] H[b,d] H[a,d] H[b,c])^2 = X[a,b] X[c,d]
)";

char variable(Scanner& sc) {
  const char c = sc.get();
  if (c < 'a' || c > 'f') sc.error(std::string("formal index must be a..f, got '") + c + "'");
  return c;
}

void parse_schematic_seq(Scanner& sc, std::vector<SchematicGen>& out, bool nested) {
  while (!sc.done()) {
    if (nested && sc.peek() == ')') return;
    if (sc.accept(kEpsilon) || sc.accept("eps")) continue;
    if (sc.accept("(")) {
      std::vector<SchematicGen> group;
      parse_schematic_seq(sc, group, true);
      sc.expect(")");
      unsigned power = 1;
      if (sc.accept("^")) power = sc.number();
      for (unsigned i = 0; i < power; ++i) out.insert(out.end(), group.begin(), group.end());
      continue;
    }
    SchematicGen g;
    g.kind = kind_from_letter(sc.get(), sc);
    sc.expect("[");
    g.a = variable(sc);
    if (g.kind != GenKind::Z) {
      sc.accept(",");
      g.b = variable(sc);
      if (g.a == g.b) sc.error("schematic generator repeats a formal index");
    }
    sc.expect("]");
    out.push_back(g);
  }
}

void collect_vars(std::span<const SchematicGen> side, std::vector<char>& vars) {
  auto add = [&](char v) {
    if (v && std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  };
  for (const SchematicGen& g : side) {
    add(g.a);
    if (g.kind != GenKind::Z) add(g.b);
  }
}

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::vector<SchematicGen> parse_schematic(std::string_view text) {
  Scanner sc(text);
  std::vector<SchematicGen> out;
  parse_schematic_seq(sc, out, false);
  return out;
}

std::string schematic_to_string(std::span<const SchematicGen> side) {
  if (side.empty()) return "ε";
  std::string out;
  for (size_t i = 0; i < side.size(); ++i) {
    if (i) out += ' ';
    const SchematicGen& g = side[i];
    out += g.kind == GenKind::Z ? 'Z' : g.kind == GenKind::X ? 'X' : 'H';
    out += '[';
    out += g.a;
    if (g.kind != GenKind::Z) {
      out += ',';
      out += g.b;
    }
    out += ']';
  }
  return out;
}

std::vector<Relation> parse_catalog(std::string_view text) {
  std::vector<Relation> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string body = trim(line.substr(0, line.find('#')));
    if (body.empty()) continue;
    const size_t colon = body.find(':');
    const size_t eq = body.find('=');
    if (colon == std::string::npos || eq == std::string::npos || eq < colon)
      fail(ErrorCode::Parse, "catalog line must read '<id>: <lhs> = <rhs>': " + line);
    Relation rel;
    rel.id = trim(std::string_view(body).substr(0, colon));
    rel.lhs = parse_schematic(std::string_view(body).substr(colon + 1, eq - colon - 1));
    rel.rhs = parse_schematic(std::string_view(body).substr(eq + 1));
    collect_vars(rel.lhs, rel.vars);
    collect_vars(rel.rhs, rel.vars);
    out.push_back(std::move(rel));
  }
  std::sort(out.begin(), out.end(), [](const Relation& x, const Relation& y) { return x.id < y.id; });
  return out;
}

std::string catalog_to_text(std::span<const Relation> catalog) {
  std::string out;
  for (const Relation& r : catalog)
    out += r.id + ": " + schematic_to_string(r.lhs) + " = " + schematic_to_string(r.rhs) + "\n";
  return out;
}

const std::vector<Relation>& relation_catalog() {
  static const std::vector<Relation> catalog = parse_catalog(kBuiltinCatalog);
  return catalog;
}

const Relation& find_relation(std::string_view id) {
  for (const Relation& r : relation_catalog())
    if (r.id == id) return r;
  fail(ErrorCode::Parse, "unknown relation '" + std::string(id) + "'");
}

namespace {

void check_assignment(std::span<const char> vars, const IndexAssignment& assignment, size_t n,
                      ErrorCode code) {
  for (size_t i = 0; i < vars.size(); ++i) {
    const unsigned v = slot(assignment, vars[i]);
    if (v == 0) fail(code, std::string("formal index '") + vars[i] + "' is unassigned");
    if (v > n)
      fail(code, std::string("formal index '") + vars[i] + "' = " + std::to_string(v) +
                     " exceeds n=" + std::to_string(n));
    for (size_t j = 0; j < i; ++j)
      if (slot(assignment, vars[j]) == v)
        fail(code, std::string("formal indices '") + vars[j] + "' and '" + vars[i] +
                       "' must be distinct");
  }
}

}  // namespace

Word instantiate(std::span<const SchematicGen> side, const IndexAssignment& assignment, size_t n) {
  std::vector<char> vars;
  collect_vars(side, vars);
  check_assignment(vars, assignment, n, ErrorCode::Domain);
  Word w;
  w.n = n;
  for (const SchematicGen& g : side) {
    Generator c;
    c.kind = g.kind;
    c.a = slot(assignment, g.a);
    c.b = g.kind == GenKind::Z ? 0 : slot(assignment, g.b);
    w.gens.push_back(c);
  }
  return w;
}

bool verify_relation(const Relation& rel, const IndexAssignment& assignment, size_t n) {
  check_assignment(rel.vars, assignment, n, ErrorCode::Domain);
  return word_sem(instantiate(rel.lhs, assignment, n)) ==
         word_sem(instantiate(rel.rhs, assignment, n));
}

namespace {

std::string assignment_to_string(std::span<const char> vars, const IndexAssignment& a) {
  std::string out;
  for (size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ',';
    out += vars[i];
    out += '=';
    out += std::to_string(slot(a, vars[i]));
  }
  return out;
}

}  // namespace

std::vector<RelationReport> verify_catalog(std::span<const Relation> catalog, size_t n,
                                           size_t max_assignments) {
  std::vector<RelationReport> out;
  for (const Relation& rel : catalog) {
    RelationReport rep;
    rep.id = rel.id;
    if (rel.min_dim() > n) {
      rep.status = RelationReport::Status::Skipped;
      rep.note = "needs n >= " + std::to_string(rel.min_dim());
      out.push_back(std::move(rep));
      continue;
    }
    for_each_assignment(rel.vars, n, [&](const IndexAssignment& a) {
      ++rep.checked;
      if (!verify_relation(rel, a, n)) {
        if (rep.failed++ == 0) rep.note = "first failure at " + assignment_to_string(rel.vars, a);
      }
      return max_assignments == 0 || rep.checked < max_assignments;
    });
    rep.status = rep.failed ? RelationReport::Status::Fail : RelationReport::Status::Pass;
    out.push_back(std::move(rep));
  }
  std::sort(out.begin(), out.end(),
            [](const RelationReport& x, const RelationReport& y) { return x.id < y.id; });
  return out;
}

// ---------------------------------------------------------------------------
// Derivations

std::string to_string(const DerivationStep& s) {
  const Relation& rel = find_relation(s.relation);
  return "step " + s.relation + (s.direction == Direction::LeftToRight ? " L->R" : " R->L") +
         " at " + std::to_string(s.position) + " with " +
         assignment_to_string(rel.vars, s.assignment);
}

DerivationStep parse_step(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string kw, dir, at, with;
  DerivationStep step;
  long long pos = -1;
  if (!(in >> kw) || kw != "step" || !(in >> step.relation) || !(in >> dir) || !(in >> at) ||
      at != "at" || !(in >> pos) || pos < 0)
    fail(ErrorCode::Parse, "malformed step line: '" + std::string(line) + "'");
  find_relation(step.relation);
  if (dir == "L->R" || dir == "->") step.direction = Direction::LeftToRight;
  else if (dir == "R->L" || dir == "<-") step.direction = Direction::RightToLeft;
  else fail(ErrorCode::Parse, "step direction must be L->R or R->L, got '" + dir + "'");
  step.position = static_cast<size_t>(pos);
  if (in >> with) {
    if (with != "with") fail(ErrorCode::Parse, "expected 'with' in step line");
    std::string rest, chunk;
    while (in >> chunk) rest += chunk;
    std::istringstream items(rest);
    std::string item;
    while (std::getline(items, item, ',')) {
      if (item.size() < 3 || item[1] != '=' || item[0] < 'a' || item[0] > 'f')
        fail(ErrorCode::Parse, "bad index binding '" + item + "'");
      slot(step.assignment, item[0]) = static_cast<unsigned>(std::stoul(item.substr(2)));
    }
  }
  return step;
}

std::vector<DerivationStep> parse_derivation(std::string_view text) {
  std::vector<DerivationStep> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const std::string body = trim(line.substr(0, line.find('#')));
    if (!body.empty()) out.push_back(parse_step(body));
  }
  return out;
}

Word apply_step(const Word& w, const DerivationStep& step) {
  const Relation& rel = find_relation(step.relation);
  check_assignment(rel.vars, step.assignment, w.n, ErrorCode::Step);
  const bool forward = step.direction == Direction::LeftToRight;
  const Word source = instantiate(forward ? rel.lhs : rel.rhs, step.assignment, w.n);
  const Word target = instantiate(forward ? rel.rhs : rel.lhs, step.assignment, w.n);
  const size_t p = step.position;
  if (p > w.gens.size() || w.gens.size() - p < source.gens.size() ||
      !std::equal(source.gens.begin(), source.gens.end(), w.gens.begin() + static_cast<long>(p)))
    fail(ErrorCode::Step, rel.id + ": '" + tokens_to_string(source) + "' does not occur at position " +
                              std::to_string(p));
  Word out;
  out.n = w.n;
  out.gens.reserve(w.gens.size() - source.gens.size() + target.gens.size());
  out.gens.insert(out.gens.end(), w.gens.begin(), w.gens.begin() + static_cast<long>(p));
  out.gens.insert(out.gens.end(), target.gens.begin(), target.gens.end());
  out.gens.insert(out.gens.end(), w.gens.begin() + static_cast<long>(p + source.gens.size()),
                  w.gens.end());
  return out;
}

bool check_derivation(const Word& from, std::span<const DerivationStep> steps, const Word& to,
                      bool check_semantics) {
  Word current = from;
  std::optional<ExactMatrix> reference;
  if (check_semantics) reference = word_sem(from);
  for (size_t i = 0; i < steps.size(); ++i) {
    try {
      current = apply_step(current, steps[i]);
    } catch (const Error& e) {
      fail(ErrorCode::Step, "step " + std::to_string(i + 1) + ": " + e.what());
    }
    if (reference && word_sem(current) != *reference)
      fail(ErrorCode::Internal, "step " + std::to_string(i + 1) + " changed the semantics");
  }
  return current == to;
}

std::optional<IndexAssignment> match_at(const Word& w, size_t position,
                                        std::span<const SchematicGen> pattern) {
  if (position > w.gens.size() || w.gens.size() - position < pattern.size()) return std::nullopt;
  IndexAssignment bind{};
  auto unify = [&](char var, unsigned value) {
    unsigned& s = slot(bind, var);
    if (s == 0) s = value;
    return s == value;
  };
  for (size_t i = 0; i < pattern.size(); ++i) {
    const SchematicGen& p = pattern[i];
    const Generator& g = w.gens[position + i];
    if (p.kind != g.kind || !unify(p.a, g.a)) return std::nullopt;
    if (p.kind != GenKind::Z && !unify(p.b, g.b)) return std::nullopt;
  }
  std::vector<char> vars;
  collect_vars(pattern, vars);
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (slot(bind, vars[i]) == slot(bind, vars[j])) return std::nullopt;
  return bind;
}

bool words_equiv(const Word& lhs, const Word& rhs) {
  if (lhs.n != rhs.n) fail(ErrorCode::Dimension, "words_equiv: words over different G_n");
  const ExactMatrix ml = word_sem(lhs), mr = word_sem(rhs);
  const bool same_form = normal_form_word(ml) == normal_form_word(mr);
  if (same_form != (ml == mr))
    fail(ErrorCode::Internal, "normal forms disagree with matrix equality");
  return same_form;
}

}  // namespace hpi
