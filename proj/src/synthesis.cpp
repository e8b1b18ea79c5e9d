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

#include "hpi/synthesis.hpp"

#include "hpi/error.hpp"

namespace hpi {

namespace {

void apply_syllable(const Syllable& s, ExactMatrix& n) {
  // (G_1 ... G_r) N: the last generator acts first.
  for (auto it = s.gens.rbegin(); it != s.gens.rend(); ++it) apply_left(*it, n);
}

// Pivot rows for the Hadamard step: the least row with an odd residue and the
// next row carrying the same residue (both 1-based).
std::pair<unsigned, unsigned> pick_pivots(const ExactVector& col) {
  size_t i1 = col.size();
  for (size_t i = 0; i < col.size(); ++i)
    if (is_odd_residue(residue_mod2(col.num[i]))) {
      i1 = i;
      break;
    }
  if (i1 == col.size())
    fail(ErrorCode::Internal, "synthesis: column with positive lde has no odd residue");
  const Residue target = residue_mod2(col.num[i1]);
  for (size_t i = i1 + 1; i < col.size(); ++i)
    if (residue_mod2(col.num[i]) == target)
      return {static_cast<unsigned>(i1 + 1), static_cast<unsigned>(i + 1)};
  fail(ErrorCode::Internal, "synthesis: no second row with residue " +
                                std::string(to_string(target)));
}

}  // namespace

SynthesisTrace synthesize(const ExactMatrix& m) {
  if (!is_orthogonal(m)) fail(ErrorCode::Domain, "synthesize: matrix is not orthogonal");
  SynthesisTrace trace;
  trace.n = m.dim();
  trace.initial = level_unchecked(m);
  ExactMatrix n = m;
  Level previous = trace.initial;

  auto emit = [&](Syllable s) {
    apply_syllable(s, n);
    Level now = level_unchecked(n);
    if (!(now < previous))
      fail(ErrorCode::Internal, "synthesis: level did not decrease (" + to_string(previous) +
                                    " -> " + to_string(now) + ")");
    previous = now;
    trace.syllables.push_back(std::move(s));
    trace.levels.push_back(now);
  };

  for (size_t j = trace.n; j >= 1; --j) {
    ExactVector col = n.column(j - 1);
    while (col.k > 0) {
      const unsigned k_before = col.k;
      auto [i1, i2] = pick_pivots(col);
      Syllable s;
      s.gens.push_back(Generator::h(1, i2));
      if (i1 > 1) s.gens.push_back(Generator::x(1, i1));
      emit(std::move(s));
      col = n.column(j - 1);
      if (col.k > k_before) fail(ErrorCode::Internal, "synthesis: lde increased");
    }
    // The column is now a signed basis vector (-1)^tau e_a with a <= j.
    const auto jj = static_cast<unsigned>(j);
    unsigned a = 0;
    bool negative = false;
    for (size_t i = 0; i < col.size(); ++i) {
      if (col.num[i].is_zero()) continue;
      if (a != 0 || sgn(col.num[i].b()) != 0 || abs(col.num[i].a()) != 1)
        fail(ErrorCode::Internal, "synthesis: integral column is not a signed basis vector");
      a = static_cast<unsigned>(i + 1);
      negative = sgn(col.num[i].a()) < 0;
    }
    if (a == 0 || a > jj) fail(ErrorCode::Internal, "synthesis: unexpected column support");
    if (a == jj && !negative) continue;
    Syllable s;
    if (a < jj) s.gens.push_back(Generator::x(a, jj));
    if (negative) s.gens.push_back(Generator::z(a));
    emit(std::move(s));
  }
  if (!n.is_identity()) fail(ErrorCode::Internal, "synthesis: did not reach the identity");
  return trace;
}

Word normal_form_word(const SynthesisTrace& trace) {
  // M = W_1^-1 ... W_l^-1 and each W_i^-1 is W_i's generators reversed.
  Word w;
  w.n = trace.n;
  for (const Syllable& s : trace.syllables)
    w.gens.insert(w.gens.end(), s.gens.rbegin(), s.gens.rend());
  return w;
}

Word normal_form_word(const ExactMatrix& m) { return normal_form_word(synthesize(m)); }

Word hpermute(std::span<const unsigned> perm) {
  const ExactMatrix target = permutation_matrix(perm);
  Word w = normal_form_word(target);
  if (word_sem(w) != target) fail(ErrorCode::Internal, "hpermute: word does not realise X_pi");
  return w;
}

std::string trace_to_text(const SynthesisTrace& trace) {
  std::string out = "# n=" + std::to_string(trace.n) + " initial level " +
                    to_string(trace.initial) + "\n";
  for (size_t i = 0; i < trace.syllables.size(); ++i) {
    const Syllable& s = trace.syllables[i];
    for (size_t g = 0; g < s.gens.size(); ++g) {
      if (g) out += ' ';
      out += to_string(s.gens[g]);
    }
    out += "  # level " + to_string(trace.levels[i]) + "\n";
  }
  return out;
}

}  // namespace hpi
