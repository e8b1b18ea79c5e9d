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

// Translations between Q-Pi terms, Hadamard-Pi terms and generator words.
//
//   wsem   Q-Pi term        -> word over G_hdim(input)
//   t_q    word over G_n    -> Q-Pi term on type_ones(n)
//   qsem   Hadamard-Pi term -> the same tree read as a Q-Pi term
//   t_h    Q-Pi term c      -> Hadamard-Pi term on 1 + input, sem = I_1 (+) sem(c)

#pragma once

#include <string>

#include "hpi/lang.hpp"
#include "hpi/words.hpp"

namespace hpi {

Word wsem(const Term& c, const TypeRef& input);
TermRef t_q(const Word& w);
/// Throws Domain if `c` uses neg1.
TermRef qsem(const TermRef& c);
TermRef t_h(const TermRef& c, const TypeRef& input);

/// Ranking used to bound the unfolding of id_b * c in t_h.
Integer th_rank(const Type& b);

struct TranslationReport {
  enum class Relation { Equal, PaddedEqual };

  std::string source;
  std::string target;
  Relation relation = Relation::Equal;
  /// The matrix the target must denote, derived from the source.
  ExactMatrix expected;
  ExactMatrix actual;
  bool holds = false;

  /// "verified: semantics preserved" or "verified: I₁ ⊕ source" when the
  /// relation holds, a FAILED line otherwise.
  std::string verdict() const;
  /// source, target, relation, both matrices and the verdict line.
  std::string to_text() const;
};

TranslationReport report_wsem(const TermRef& c, const TypeRef& input);
TranslationReport report_t_q(const Word& w);
TranslationReport report_qsem(const TermRef& c, const TypeRef& input);
TranslationReport report_t_h(const TermRef& c, const TypeRef& input);
/// Checks sem(t_q(wsem(c))) = sem(c).
TranslationReport roundtrip_check(const TermRef& c, const TypeRef& input);

}  // namespace hpi
