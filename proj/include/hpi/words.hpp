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

// Words over the generators G_n, the relation catalog, and derivation
// checking.
//
// A word G_1 G_2 ... G_l denotes the matrix product G_1 * G_2 * ... * G_l in
// the listed order.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hpi/linalg.hpp"

namespace hpi {

struct Word {
  size_t n = 0;
  std::vector<Generator> gens;

  bool empty() const { return gens.empty(); }
  size_t size() const { return gens.size(); }
  friend bool operator==(const Word&, const Word&) = default;
};

/// Throws Index if a generator does not fit G_n.
void validate(const Word& w);

ExactMatrix word_sem(const Word& w);

Word concat(const Word& lhs, const Word& rhs);
/// Same generators read in reverse; for involutive generators this is the
/// inverse word.
Word reversed(const Word& w);
/// Every index increased by m, ambient dimension n + m.
Word shift(const Word& w, size_t m);
/// Same generators viewed in G_{new_n}, new_n >= n.
Word embed(const Word& w, size_t new_n);
/// Rewrites reversed-index generators: X[c,b] -> X[b,c] and
/// H[c,b] -> X[b,c] H[b,c] X[b,c] for b < c.
Word normalize_reversed(const Word& w);

/// Generators as space separated tokens, or "ε" for the empty word.
std::string tokens_to_string(const Word& w);
/// "n=<dim>\n" followed by tokens_to_string.
std::string to_text(const Word& w);
/// Parses an optional "n=<dim>" header followed by tokens Z[a], X[b,c],
/// H[b,c] (commas or whitespace inside brackets; "ε"/"eps" for empty).
/// Without a header n is the largest index used. Reversed generators are
/// normalised.
Word parse_word(std::string_view text);

// ---------------------------------------------------------------------------
// Relation catalog

/// A generator whose indices are formal variables 'a'..'f'.
struct SchematicGen {
  GenKind kind = GenKind::Z;
  char a = 'a';
  char b = 0;
  friend bool operator==(const SchematicGen&, const SchematicGen&) = default;
};

struct Relation {
  std::string id;
  std::vector<SchematicGen> lhs;
  std::vector<SchematicGen> rhs;
  /// Distinct formal variables used, in first-appearance order.
  std::vector<char> vars;

  /// Smallest n admitting an injective instantiation.
  size_t min_dim() const { return vars.size(); }
};

/// Values for formal variables 'a'..'f' (0 = unassigned).
using IndexAssignment = std::array<unsigned, 6>;

inline unsigned& slot(IndexAssignment& s, char var) { return s[static_cast<size_t>(var - 'a')]; }
inline unsigned slot(const IndexAssignment& s, char var) { return s[static_cast<size_t>(var - 'a')]; }

/// The built-in catalog: the generating relations a1..d4 plus the derived
/// e1, e2, f1, f2, sorted by id.
const std::vector<Relation>& relation_catalog();
const Relation& find_relation(std::string_view id);

/// Catalog text, one relation per line: "<id>: <lhs> = <rhs>", sides are
/// schematic tokens such as H[a,b], "(...)^k" groups allowed, "ε" for empty.
std::vector<Relation> parse_catalog(std::string_view text);
std::string catalog_to_text(std::span<const Relation> catalog);

std::vector<SchematicGen> parse_schematic(std::string_view text);
std::string schematic_to_string(std::span<const SchematicGen> side);

/// Instantiates a schematic side. Every used variable must be assigned and
/// the assigned values of used variables must be distinct and within [1,n].
Word instantiate(std::span<const SchematicGen> side, const IndexAssignment& assignment, size_t n);

/// True iff both sides of `rel` denote the same matrix under the assignment.
bool verify_relation(const Relation& rel, const IndexAssignment& assignment, size_t n);

struct RelationReport {
  std::string id;
  enum class Status { Pass, Fail, Skipped } status = Status::Pass;
  size_t checked = 0;
  size_t failed = 0;
  std::string note;  // skip reason or first failing assignment
};

/// Checks every injective assignment of each relation's variables into [n],
/// at most `max_assignments` per relation (0 = unlimited). Sorted by id.
std::vector<RelationReport> verify_catalog(std::span<const Relation> catalog, size_t n,
                                           size_t max_assignments = 0);

/// Calls `visit` for each injective assignment of `vars` into [1, n] in
/// lexicographic order; stops early when `visit` returns false.
template <typename Visit>
void for_each_assignment(std::span<const char> vars, size_t n, Visit&& visit);

// ---------------------------------------------------------------------------
// Derivations

enum class Direction { LeftToRight, RightToLeft };

struct DerivationStep {
  std::string relation;
  Direction direction = Direction::LeftToRight;
  IndexAssignment assignment{};
  size_t position = 0;
};

std::string to_string(const DerivationStep& s);
/// "step <rel-id> <dir> at <pos> with <a=1,b=2,...>"; dir is "L->R" or "R->L".
DerivationStep parse_step(std::string_view line);
/// Step lines; blank lines and '#' comments are ignored.
std::vector<DerivationStep> parse_derivation(std::string_view text);

/// Replaces the instantiated source side of the step's relation, which must
/// occur contiguously at `position`, with the target side. Throws Step on
/// mismatch.
Word apply_step(const Word& w, const DerivationStep& step);

/// Applies `steps` in order starting at `from`; true iff the result equals
/// `to` exactly. A step that does not apply throws Step naming its index.
/// With `check_semantics` each intermediate word's matrix is compared to
/// the starting matrix.
bool check_derivation(const Word& from, std::span<const DerivationStep> steps, const Word& to,
                      bool check_semantics = false);

/// Unifies `pattern` with the generators of `w` starting at `position`.
/// Returns the bindings for the variables occurring in `pattern` (others
/// stay 0), or nullopt if the pattern does not match there.
std::optional<IndexAssignment> match_at(const Word& w, size_t position,
                                        std::span<const SchematicGen> pattern);

/// Decides semantic equality by comparing canonical normal forms; matrix
/// equality is cross-checked and a disagreement raises Internal.
bool words_equiv(const Word& lhs, const Word& rhs);

// ---------------------------------------------------------------------------

template <typename Visit>
void for_each_assignment(std::span<const char> vars, size_t n, Visit&& visit) {
  IndexAssignment current{};
  std::vector<bool> used(n + 1, false);
  bool stop = false;
  auto rec = [&](auto&& self, size_t depth) -> void {
    if (stop) return;
    if (depth == vars.size()) {
      if (!visit(static_cast<const IndexAssignment&>(current))) stop = true;
      return;
    }
    for (unsigned v = 1; v <= n && !stop; ++v) {
      if (used[v]) continue;
      used[v] = true;
      slot(current, vars[depth]) = v;
      self(self, depth + 1);
      used[v] = false;
    }
    slot(current, vars[depth]) = 0;
  };
  if (vars.size() <= n) rec(rec, 0);
}

}  // namespace hpi
