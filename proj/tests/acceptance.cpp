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

// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic only.
// Exit status is 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hpi/error.hpp"
#include "hpi/lang.hpp"
#include "hpi/synthesis.hpp"
#include "hpi/translate.hpp"
#include "hpi/words.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

namespace hpi {
namespace {

using testing::Rng;
using testing::uniform;

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Records the first few failures and keeps counting.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks_;
    if (ok) return;
    if (++failures_ <= 3) first_ += (first_.empty() ? "" : "; ") + what();
  }
  size_t checks() const { return checks_; }
  size_t failures() const { return failures_; }
  Outcome outcome(const std::string& summary) const {
    Outcome o;
    o.pass = failures_ == 0;
    o.detail = summary + ", " + std::to_string(failures_) + " failures";
    if (!first_.empty()) o.detail += " [" + first_ + "]";
    return o;
  }

 private:
  size_t checks_ = 0, failures_ = 0;
  std::string first_;
};

std::string assignment_text(const Relation& rel, const IndexAssignment& a) {
  std::string s;
  for (char v : rel.vars) s += std::string(s.empty() ? "" : ",") + v + "=" + std::to_string(slot(a, v));
  return s;
}

// 1. every catalog relation, every injective assignment into [n], n = max(min_dim, 6)
Outcome relation_soundness() {
  Tally t;
  const auto& cat = relation_catalog();
  for (const Relation& rel : cat) {
    const size_t n = std::max<size_t>(rel.min_dim(), 6);
    for_each_assignment(std::span<const char>(rel.vars), n, [&](const IndexAssignment& a) {
      const Word lhs = instantiate(rel.lhs, a, n), rhs = instantiate(rel.rhs, a, n);
      t.expect(verify_relation(rel, a, n) && oracle::word(lhs) == oracle::word(rhs),
               [&] { return rel.id + " at " + assignment_text(rel, a); });
      return true;
    });
  }
  return t.outcome(std::to_string(cat.size()) + " relations, " + std::to_string(t.checks()) +
                   " instances");
}

// 2. synthesis reaches I with strictly decreasing level
Outcome synthesis_monotone() {
  Tally t;
  Rng rng(2);
  size_t syllables = 0;
  for (int i = 0; i < 500; ++i) {
    const size_t n = uniform(rng, 2, 6);
    const Word w = testing::random_word(rng, n, 50);
    const ExactMatrix m = word_sem(w);
    const SynthesisTrace tr = synthesize(m);
    ExactMatrix acc = m;
    Level prev = oracle::level(acc);
    bool decreasing = true;
    for (const Syllable& s : tr.syllables) {
      for (auto g = s.gens.rbegin(); g != s.gens.rend(); ++g) apply_left(*g, acc);
      const Level now = oracle::level(acc);
      decreasing = decreasing && now < prev;
      prev = now;
    }
    syllables += tr.syllables.size();
    // product of the syllables times the input, through the oracle
    oracle::QMat prod = oracle::from_matrix(m);
    for (const Syllable& s : tr.syllables) {
      oracle::QMat syl = oracle::identity(n);
      for (const Generator& g : s.gens) syl = syl * oracle::generator(g, n);
      prod = syl * prod;
    }
    t.expect(decreasing && prod == oracle::identity(n) && acc.is_identity(),
             [&] { return tokens_to_string(w); });
  }
  return t.outcome("500 words, " + std::to_string(syllables) + " syllables");
}

// 3. semantically equal words get token-identical normal forms
Outcome normal_form_canonicity() {
  Tally t;
  Rng rng(3);
  size_t differing = 0;
  for (int i = 0; i < 200; ++i) {
    const size_t n = uniform(rng, 2, 6);
    const auto [w1, w2] = testing::random_equal_pair(rng, n, 10);
    if (!(w1 == w2)) ++differing;
    const Word nf1 = normal_form_word(word_sem(w1)), nf2 = normal_form_word(word_sem(w2));
    t.expect(oracle::word(w1) == oracle::word(w2) &&
                 tokens_to_string(nf1) == tokens_to_string(nf2),
             [&] { return tokens_to_string(w1) + " vs " + tokens_to_string(w2); });
  }
  return t.outcome("200 pairs (" + std::to_string(differing) + " token-distinct inputs)");
}

// 4. (had ; swap+)^8 = id at 1+1
Outcome hx8() {
  Tally t;
  const TypeRef two = parse_type("1+1");
  const TermRef c = parse_term("(hadamard ; swap+)^8", Lang::QPi);
  t.expect(oracle::from_matrix(sem(*c, two)) == oracle::identity(2), [] { return "sem != I2"; });
  t.expect(equiv_terms(*c, *prim(Prim::Id), two), [] { return "equiv != EQUIV"; });
  // and no smaller power is the identity
  for (size_t k = 1; k < 8; ++k)
    t.expect(!sem(*iterate(parse_term("had ; swap+", Lang::QPi), k), two).is_identity(),
             [k] { return "power " + std::to_string(k) + " is already I2"; });
  return t.outcome("(had ; swap+)^8 = I2, order 8");
}

// 5. E1-E3, H1-H2 and (h*h) ; cx ; (h*h) = swap* ; cx ; swap*
Outcome axioms() {
  Tally t;
  struct Eq {
    const char* name;
    const char* lhs;
    const char* rhs;
    const char* type;
  };
  const Eq eqs[] = {
      {"E1", "neg1 ; neg1", "id", "1"},
      {"E2", "had ; had", "id", "1+1"},
      {"E3", "had ; swap+ ; had", "id + neg1", "1+1"},
      {"H1", "had ; had", "id", "1+1"},
      {"H2",
       "(swap+ + id) ; assocr+ ; (id + (had ; swap+ ; had)) ; assocl+",
       "assocr+ ; (id + (had ; swap+ ; had)) ; assocl+ ; (swap+ + id)", "(1+1)+1"},
      {"hhcxhh", nullptr, nullptr, "(1+1)*(1+1)"},
  };
  for (const Eq& e : eqs) {
    TermRef l, r;
    if (!e.lhs) {
      // (h*h) ; cx ; (h*h) against swap* ; cx ; swap*
      const TermRef hh = times(prim(Prim::Had), prim(Prim::Had));
      const TermRef sw = prim(Prim::SwapTimes);
      l = seq_all({hh, gate_cx(), hh});
      r = seq_all({sw, gate_cx(), sw});
    } else {
      l = parse_term(e.lhs, Lang::QPi);
      r = parse_term(e.rhs, Lang::QPi);
    }
    const TypeRef in = parse_type(e.type);
    const bool typed = *typecheck(*l, in).dst == *typecheck(*r, in).dst;
    t.expect(typed && oracle::from_matrix(sem(*l, in)) == oracle::from_matrix(sem(*r, in)),
             [&] { return std::string(e.name); });
  }
  // the entries themselves: sem(had) = (1/sqrt2)[[1,1],[1,-1]], sem(neg1) = -1
  t.expect(oracle::from_matrix(sem(*prim(Prim::Had), parse_type("1+1"))) ==
               oracle::generator(Generator::h(1, 2), 2),
           [] { return "sem(had)"; });
  t.expect(oracle::from_matrix(sem(*prim(Prim::Neg1), type_one())) ==
               oracle::generator(Generator::z(1), 1),
           [] { return "sem(neg1)"; });
  return t.outcome("E1 E2 E3 H1 H2 hhcxhh");
}

// 6. translation contracts on random terms with hdim <= 8
Outcome translation_contracts() {
  Tally t;
  Rng rng(6);
  size_t quantum = 0;
  for (int i = 0; i < 300; ++i) {
    const TypeRef in = testing::random_type(rng, 8, 3, true);
    const testing::Typed q = testing::random_term(rng, in, Lang::QPi, 4);
    if (!in_language(*q.term, Lang::Pi)) ++quantum;
    const ExactMatrix m = sem(*q.term, in);
    const Word w = wsem(*q.term, in);
    t.expect(sem(*t_q(w), type_ones(w.n)) == m, [&] { return "t_q.wsem " + to_string(*q.term); });

    const TermRef h = t_h(q.term, in);
    t.expect(in_language(*h, Lang::HPi) &&
                 sem(*h, type_sum(type_one(), in)) == direct_sum(ExactMatrix::identity(1), m),
             [&] { return "t_h " + to_string(*q.term); });

    const testing::Typed hp = testing::random_term(rng, in, Lang::HPi, 4);
    t.expect(sem(*qsem(hp.term), in) == sem(*hp.term, in),
             [&] { return "qsem " + to_string(*hp.term); });
  }
  return t.outcome("300 terms x 3 contracts (" + std::to_string(quantum) + " use had or neg1)");
}

// 7. ccx is Toffoli, ch is diag(I2, H)
Outcome derived_gates() {
  Tally t;
  const TypeRef two = parse_type("1+1");
  const ExactMatrix ccx = sem(*gate_ccx(), type_prod(two, type_prod(two, two)));
  const ExactMatrix ch = sem(*gate_ch(), type_prod(two, two));

  oracle::QMat toffoli(8);
  for (size_t j = 0; j < 8; ++j) toffoli.at(j >= 6 ? 13 - j : j, j) = oracle::from_ints(1, 0);
  const unsigned rows78[] = {7, 8}, rows34[] = {3, 4};
  const ExactMatrix x = generator_matrix(Generator::x(1, 2), 2);
  const ExactMatrix h = generator_matrix(Generator::h(1, 2), 2);
  t.expect(oracle::from_matrix(ccx) == toffoli, [] { return "ccx vs Toffoli"; });
  t.expect(ccx == m_level_embed(x, rows78, 8), [] { return "ccx vs level embedding"; });

  oracle::QMat block = oracle::identity(4);
  block.at(2, 2) = block.at(2, 3) = block.at(3, 2) = oracle::Q2{0, mpq_class(1, 2)};
  block.at(3, 3) = oracle::Q2{0, mpq_class(-1, 2)};
  t.expect(oracle::from_matrix(ch) == block, [] { return "ch vs diag(I2,H)"; });
  t.expect(ch == m_level_embed(h, rows34, 4), [] { return "ch vs level embedding"; });
  return t.outcome("ccx 8x8, ch 4x4");
}

// 8. level-2 laws of Pi on random instances
struct Law {
  std::string family, name;
  /// returns {lhs, rhs, input}
  std::function<std::tuple<TermRef, TermRef, TypeRef>(Rng&)> make;
};

TermRef P(Prim p) { return prim(p); }

testing::Typed rt(Rng& rng, const TypeRef& in) { return testing::random_term(rng, in, Lang::Pi, 3); }
TypeRef ty(Rng& rng) { return testing::random_type(rng, 3, 2); }
TypeRef ty0(Rng& rng) { return testing::random_type(rng, 3, 2, true); }

std::vector<Law> laws() {
  using std::make_tuple;
  const auto id = [] { return P(Prim::Id); };
  std::vector<Law> v;
  // unitality
  v.push_back({"unitality", "id;c", [=](Rng& r) {
                 const TypeRef b = ty(r);
                 const auto c = rt(r, b);
                 return make_tuple(seq(id(), c.term), c.term, b);
               }});
  v.push_back({"unitality", "c;id", [=](Rng& r) {
                 const TypeRef b = ty(r);
                 const auto c = rt(r, b);
                 return make_tuple(seq(c.term, id()), c.term, b);
               }});
  v.push_back({"unitality", "uniti+", [=](Rng& r) {
                 const TypeRef b = ty(r);
                 const auto c = rt(r, b);
                 return make_tuple(seq_all({P(Prim::UnitiPlus), plus(id(), c.term), P(Prim::UnitePlus)}),
                                   c.term, b);
               }});
  v.push_back({"unitality", "unite+", [=](Rng& r) {
                 const TypeRef b = ty(r);
                 const auto c = rt(r, b);
                 return make_tuple(seq_all({P(Prim::UnitePlus), c.term, P(Prim::UnitiPlus)}),
                                   plus(id(), c.term), type_sum(type_zero(), b));
               }});
  v.push_back({"unitality", "uniti*", [=](Rng& r) {
                 const TypeRef b = ty(r);
                 const auto c = rt(r, b);
                 return make_tuple(
                     seq_all({P(Prim::UnitiTimes), times(id(), c.term), P(Prim::UniteTimes)}), c.term, b);
               }});
  v.push_back({"unitality", "unite*", [=](Rng& r) {
                 const TypeRef b = ty(r);
                 const auto c = rt(r, b);
                 return make_tuple(seq_all({P(Prim::UniteTimes), c.term, P(Prim::UnitiTimes)}),
                                   times(id(), c.term), type_prod(type_one(), b));
               }});
  // associativity
  v.push_back({"associativity", "seq", [=](Rng& r) {
                 const TypeRef b = ty(r);
                 const auto c1 = rt(r, b);
                 const auto c2 = rt(r, c1.dst);
                 const auto c3 = rt(r, c2.dst);
                 return make_tuple(seq(c1.term, seq(c2.term, c3.term)),
                                   seq(seq(c1.term, c2.term), c3.term), b);
               }});
  for (const bool sum : {true, false}) {
    const Prim ar = sum ? Prim::AssocrPlus : Prim::AssocrTimes;
    const Prim al = sum ? Prim::AssoclPlus : Prim::AssoclTimes;
    const auto op = sum ? plus : times;
    const auto tyop = sum ? type_sum : type_prod;
    const std::string tag = sum ? "+" : "*";
    v.push_back({"associativity", "assocr" + tag, [=](Rng& r) {
                   const TypeRef b1 = ty(r), b2 = ty(r), b3 = ty(r);
                   const auto c1 = rt(r, b1), c2 = rt(r, b2), c3 = rt(r, b3);
                   return make_tuple(seq_all({P(ar), op(c1.term, op(c2.term, c3.term)), P(al)}),
                                     op(op(c1.term, c2.term), c3.term),
                                     tyop(tyop(b1, b2), b3));
                 }});
    v.push_back({"associativity", "assocl" + tag, [=](Rng& r) {
                   const TypeRef b1 = ty(r), b2 = ty(r), b3 = ty(r);
                   const auto c1 = rt(r, b1), c2 = rt(r, b2), c3 = rt(r, b3);
                   return make_tuple(seq_all({P(al), op(op(c1.term, c2.term), c3.term), P(ar)}),
                                     op(c1.term, op(c2.term, c3.term)),
                                     tyop(b1, tyop(b2, b3)));
                 }});
    // pentagon; the product version uses * throughout
    v.push_back({"associativity", "pentagon" + tag, [=](Rng& r) {
                   const TypeRef a = ty(r), b = ty(r), c = ty(r), d = ty(r);
                   return make_tuple(seq(P(ar), P(ar)),
                                     seq(seq(op(P(ar), id()), P(ar)), op(id(), P(ar))),
                                     tyop(tyop(tyop(a, b), c), d));
                 }});
  }
  // annihilativity
  v.push_back({"annihilativity", "factorz;c*id;absorb", [=](Rng& r) {
                 const TypeRef b = ty(r);
                 const auto c = rt(r, b);
                 return make_tuple(seq_all({factorz(b), times(c.term, id()), P(Prim::Absorb)}), id(),
                                   type_zero());
               }});
  v.push_back({"annihilativity", "absorb;factorz", [=](Rng& r) {
                 const TypeRef b = ty(r);
                 const auto c = rt(r, b);
                 return make_tuple(seq(P(Prim::Absorb), factorz(c.dst)), times(c.term, id()),
                                   type_prod(b, type_zero()));
               }});
  // bifunctoriality
  v.push_back({"bifunctoriality", "id+id", [=](Rng& r) {
                 return make_tuple(plus(id(), id()), id(), type_sum(ty0(r), ty0(r)));
               }});
  v.push_back({"bifunctoriality", "id*id", [=](Rng& r) {
                 return make_tuple(times(id(), id()), id(), type_prod(ty(r), ty(r)));
               }});
  v.push_back({"bifunctoriality", "(c1+c2);(c3+c4)", [=](Rng& r) {
                 const TypeRef b1 = ty(r), b2 = ty(r);
                 const auto c1 = rt(r, b1), c2 = rt(r, b2);
                 const auto c3 = rt(r, c1.dst), c4 = rt(r, c2.dst);
                 return make_tuple(seq(plus(c1.term, c2.term), plus(c3.term, c4.term)),
                                   plus(seq(c1.term, c3.term), seq(c2.term, c4.term)),
                                   type_sum(b1, b2));
               }});
  v.push_back({"bifunctoriality", "(c1*c2);(c3*c4)", [=](Rng& r) {
                 const TypeRef b1 = ty(r), b2 = ty(r);
                 const auto c1 = rt(r, b1), c2 = rt(r, b2);
                 const auto c3 = rt(r, c1.dst), c4 = rt(r, c2.dst);
                 return make_tuple(seq(times(c1.term, c2.term), times(c3.term, c4.term)),
                                   times(seq(c1.term, c3.term), seq(c2.term, c4.term)),
                                   type_prod(b1, b2));
               }});
  // distributivity
  v.push_back({"distributivity", "factor", [=](Rng& r) {
                 const TypeRef b1 = ty(r), b2 = ty(r), b3 = ty(r);
                 const auto c1 = rt(r, b1), c2 = rt(r, b2), c3 = rt(r, b3);
                 return make_tuple(
                     seq_all({P(Prim::Factor), times(plus(c1.term, c2.term), c3.term), P(Prim::Dist)}),
                     plus(times(c1.term, c3.term), times(c2.term, c3.term)),
                     type_sum(type_prod(b1, b3), type_prod(b2, b3)));
               }});
  v.push_back({"distributivity", "dist", [=](Rng& r) {
                 const TypeRef b1 = ty(r), b2 = ty(r), b3 = ty(r);
                 const auto c1 = rt(r, b1), c2 = rt(r, b2), c3 = rt(r, b3);
                 return make_tuple(
                     seq_all({P(Prim::Dist), plus(times(c1.term, c3.term), times(c2.term, c3.term)),
                              P(Prim::Factor)}),
                     times(plus(c1.term, c2.term), c3.term), type_prod(type_sum(b1, b2), b3));
               }});
  // coherence
  v.push_back({"coherence", "unite+ triangle", [=](Rng& r) {
                 return make_tuple(seq(P(Prim::AssocrPlus), plus(id(), P(Prim::UnitePlus))),
                                   seq(plus(P(Prim::SwapPlus), id()), plus(P(Prim::UnitePlus), id())),
                                   type_sum(type_sum(ty(r), type_zero()), ty(r)));
               }});
  v.push_back({"coherence", "unite* triangle", [=](Rng& r) {
                 return make_tuple(
                     seq(P(Prim::AssocrTimes), times(id(), P(Prim::UniteTimes))),
                     seq(times(P(Prim::SwapTimes), id()), times(P(Prim::UniteTimes), id())),
                     type_prod(type_prod(ty(r), type_one()), ty(r)));
               }});
  for (const bool sum : {true, false}) {
    const Prim ar = sum ? Prim::AssocrPlus : Prim::AssocrTimes;
    const Prim al = sum ? Prim::AssoclPlus : Prim::AssoclTimes;
    const Prim sw = sum ? Prim::SwapPlus : Prim::SwapTimes;
    const auto op = sum ? plus : times;
    const auto tyop = sum ? type_sum : type_prod;
    const std::string tag = sum ? "+" : "*";
    v.push_back({"coherence", "hexagon assocr" + tag, [=](Rng& r) {
                   return make_tuple(seq(seq(P(ar), P(sw)), P(ar)),
                                     seq(seq(op(P(sw), id()), P(ar)), op(id(), P(sw))),
                                     tyop(tyop(ty(r), ty(r)), ty(r)));
                 }});
    v.push_back({"coherence", "hexagon assocl" + tag, [=](Rng& r) {
                   return make_tuple(seq(seq(P(al), P(sw)), P(al)),
                                     seq(seq(op(id(), P(sw)), P(al)), op(P(sw), id())),
                                     tyop(ty(r), tyop(ty(r), ty(r))));
                 }});
  }
  // naturality
  v.push_back({"naturality", "swap+", [=](Rng& r) {
                 const TypeRef b1 = ty(r), b2 = ty(r);
                 const auto c1 = rt(r, b2), c2 = rt(r, b1);
                 return make_tuple(seq_all({P(Prim::SwapPlus), plus(c1.term, c2.term), P(Prim::SwapPlus)}),
                                   plus(c2.term, c1.term), type_sum(b1, b2));
               }});
  v.push_back({"naturality", "swap*", [=](Rng& r) {
                 const TypeRef b1 = ty(r), b2 = ty(r);
                 const auto c1 = rt(r, b2), c2 = rt(r, b1);
                 return make_tuple(
                     seq_all({P(Prim::SwapTimes), times(c1.term, c2.term), P(Prim::SwapTimes)}),
                     times(c2.term, c1.term), type_prod(b1, b2));
               }});
  return v;
}

Outcome level2_laws() {
  Tally t;
  Rng rng(8);
  const auto all = laws();
  std::vector<std::string> families;
  for (const Law& law : all) {
    if (std::find(families.begin(), families.end(), law.family) == families.end())
      families.push_back(law.family);
    for (int i = 0; i < 20; ++i) {
      const auto [lhs, rhs, in] = law.make(rng);
      const CombinatorType tl = typecheck(*lhs, in), tr = typecheck(*rhs, in);
      t.expect(*tl.dst == *tr.dst && sem(*lhs, in) == sem(*rhs, in), [&] {
        return law.family + "/" + law.name + ": " + to_string(*lhs) + " vs " + to_string(*rhs);
      });
    }
  }
  return t.outcome(std::to_string(families.size()) + " families, " + std::to_string(all.size()) +
                   " laws x 20");
}

// 9. Dyadic arithmetic against the Q(sqrt2) oracle
Outcome dyadic_oracle() {
  Tally t;
  Rng rng(9);
  auto draw = [&] {
    const long a = static_cast<long>(uniform(rng, 0, 2000)) - 1000;
    const long b = static_cast<long>(uniform(rng, 0, 2000)) - 1000;
    return Dyadic::reduce(RingInt(Integer(a), Integer(b)), static_cast<unsigned>(uniform(rng, 0, 12)));
  };
  for (int i = 0; i < 10000; ++i) {
    const Dyadic x = draw(), y = draw();
    const oracle::Q2 ox = oracle::from_dyadic(x), oy = oracle::from_dyadic(y);
    Dyadic got;
    oracle::Q2 want;
    const char* op = "";
    switch (i % 4) {
      case 0: got = x + y; want = ox + oy; op = "+"; break;
      case 1: got = x - y; want = ox - oy; op = "-"; break;
      case 2: got = x * y; want = ox * oy; op = "*"; break;
      default: got = -x; want = -ox; op = "neg"; break;
    }
    t.expect(oracle::from_dyadic(got) == want && lde(got) == oracle::lde(want),
             [&] { return to_string(x) + " " + op + " " + to_string(y); });
  }
  return t.outcome("10000 operations");
}

}  // namespace
}  // namespace hpi

int main() {
  using Clock = std::chrono::steady_clock;
  const std::pair<const char*, hpi::Outcome (*)()> criteria[] = {
      {"relation soundness", hpi::relation_soundness},
      {"synthesis correctness and monotone level", hpi::synthesis_monotone},
      {"normal-form canonicity", hpi::normal_form_canonicity},
      {"hx8", hpi::hx8},
      {"equational axioms", hpi::axioms},
      {"translation contracts", hpi::translation_contracts},
      {"derived gates", hpi::derived_gates},
      {"level-2 laws", hpi::level2_laws},
      {"dyadic oracle", hpi::dyadic_oracle},
  };
  bool all = true;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = Clock::now();
    hpi::Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("%s %d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(),
                secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
