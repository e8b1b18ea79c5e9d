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

// Exact synthesis of O_n(Z[1/sqrt2]) into generator words.
//
// synthesize() reduces the input column by column, from the last column to
// the first: while the column has a positive lde it pairs the two
// least-indexed odd-residue rows with a Hadamard, then it maps the column to
// e_j with a signed transposition. Each emitted syllable W acts as N <- W N,
// and the syllables W_1..W_l satisfy W_l ... W_1 M = I.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "hpi/linalg.hpp"
#include "hpi/words.hpp"

namespace hpi {

/// One of Z[a], X[a,j] Z[a]^t, H[1,b], H[1,b] X[1,c]. As a matrix it is the
/// product of `gens` in order.
struct Syllable {
  std::vector<Generator> gens;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct SynthesisTrace {
  size_t n = 0;
  Level initial;
  std::vector<Syllable> syllables;
  /// levels[i] is the level of N after applying syllables[0..i].
  std::vector<Level> levels;
};

/// Throws Domain for non-orthogonal input and Internal if a pivot that the
/// algorithm relies on does not exist.
SynthesisTrace synthesize(const ExactMatrix& m);

/// The canonical word N with word_sem(N) == m: the syllables inverted and
/// listed first to last, i.e. the reverse of W_l ... W_1.
Word normal_form_word(const ExactMatrix& m);
Word normal_form_word(const SynthesisTrace& trace);

/// A word whose semantics is the permutation matrix X_pi (X_pi e_j =
/// e_{pi(j)}); `perm[j-1]` is pi(j).
Word hpermute(std::span<const unsigned> perm);

/// One syllable per line followed by "# level (j,k,l)".
std::string trace_to_text(const SynthesisTrace& trace);

}  // namespace hpi
