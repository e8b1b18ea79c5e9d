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

#include "hpi/translate.hpp"

#include <optional>
#include <vector>

#include "hpi/error.hpp"
#include "hpi/synthesis.hpp"

namespace hpi {

using K = Type::Kind;

namespace {

bool is_id(const Term& t) { return t.kind == Term::Kind::Prim && t.prim == Prim::Id; }

TypeRef target_of(const Term& t, const TypeRef& in) { return typecheck(t, in).dst; }

Word swap_times_word(size_t n1, size_t n2) {
  std::vector<unsigned> perm(n1 * n2);
  for (size_t j = 0; j < perm.size(); ++j)
    perm[j] = static_cast<unsigned>((j % n2) * n1 + j / n2 + 1);
  return hpermute(perm);
}

Word swap_plus_word(size_t n1, size_t n2) {
  std::vector<unsigned> perm(n1 + n2);
  for (size_t j = 1; j <= perm.size(); ++j)
    perm[j - 1] = static_cast<unsigned>(j <= n1 ? j + n2 : j - n1);
  return hpermute(perm);
}

// hdim(b) shifted copies of w.
Word replicate(const Word& w, size_t copies) {
  Word out;
  out.n = copies * w.n;
  for (size_t i = 0; i < copies; ++i) {
    Word part = shift(w, i * w.n);
    out.gens.insert(out.gens.end(), part.gens.begin(), part.gens.end());
  }
  return out;
}

Word wsem_rec(const Term& t, const TypeRef& in, TypeRef* out) {
  const size_t n = hdim(*in);
  switch (t.kind) {
    case Term::Kind::Prim: {
      TypeRef dst = target_of(t, in);
      if (out) *out = dst;
      switch (t.prim) {
        case Prim::Neg1: return Word{1, {Generator::z(1)}};
        case Prim::Had: return Word{2, {Generator::h(1, 2)}};
        case Prim::SwapPlus: return swap_plus_word(hdim(*in->l), hdim(*in->r));
        case Prim::SwapTimes: return swap_times_word(hdim(*in->l), hdim(*in->r));
        default: return Word{n, {}};
      }
    }
    case Term::Kind::Seq: {
      TypeRef mid;
      Word w1 = wsem_rec(*t.l, in, &mid);
      Word w2 = wsem_rec(*t.r, mid, out);
      return concat(w2, w1);
    }
    case Term::Kind::Sum: {
      if (in->kind != K::Sum) typecheck(t, in);
      TypeRef o1, o2;
      Word w1 = wsem_rec(*t.l, in->l, &o1);
      Word w2 = wsem_rec(*t.r, in->r, &o2);
      if (out) *out = type_sum(o1, o2);
      return concat(embed(w1, n), shift(w2, w1.n));
    }
    case Term::Kind::Prod: {
      if (in->kind != K::Prod) typecheck(t, in);
      const TypeRef& b1 = in->l;
      const TypeRef& b2 = in->r;
      if (is_id(*t.l)) {
        TypeRef o2;
        Word w = wsem_rec(*t.r, b2, &o2);
        if (out) *out = type_prod(b1, o2);
        return replicate(w, hdim(*b1));
      }
      TypeRef b3, b4;
      Word w1 = wsem_rec(*t.l, b1, &b3);
      Word w2 = wsem_rec(*t.r, b2, &b4);
      if (out) *out = type_prod(b3, b4);
      Word result = swap_times_word(hdim(*b4), hdim(*b3));
      result = concat(result, replicate(w1, hdim(*b4)));
      result = concat(result, swap_times_word(hdim(*b1), hdim(*b4)));
      return concat(result, replicate(w2, hdim(*b1)));
    }
  }
  fail(ErrorCode::Internal, "unhandled term");
}

// ---------------------------------------------------------------------------

TermRef id() { return prim(Prim::Id); }
TermRef p(Prim x) { return prim(x); }

TermRef t_q_gen(const Generator& g, size_t n) {
  switch (g.kind) {
    case GenKind::Z: {
      if (n == 1) return p(Prim::Neg1);
      TermRef s = swap_plus_at(g.a, n, n);
      return seq_all({s, plus(id(), p(Prim::Neg1)), s});
    }
    case GenKind::X: return swap_plus_at(g.a, g.b, n);
    case GenKind::H: {
      if (n == 2) return p(Prim::Had);
      const unsigned b = std::min(g.a, g.b), c = std::max(g.a, g.b);
      TermRef sc = swap_plus_at(c, n, n);
      TermRef sb = swap_plus_at(b, n - 1, n);
      return seq_all({sc, sb, p(Prim::AssocrPlus), plus(id(), p(Prim::Had)), p(Prim::AssoclPlus),
                      sb, sc});
    }
  }
  fail(ErrorCode::Internal, "unhandled generator");
}

// ---------------------------------------------------------------------------

TermRef sum_rule(TermRef th1, TermRef th2) {
  return seq_all({p(Prim::AssoclPlus), plus(std::move(th1), id()), plus(p(Prim::SwapPlus), id()),
                  p(Prim::AssocrPlus), plus(id(), std::move(th2)), p(Prim::AssoclPlus),
                  plus(p(Prim::SwapPlus), id()), p(Prim::AssocrPlus)});
}

TermRef th(const TermRef& c, const TypeRef& in);

// T_H of id_b * c where c acts on `cin`. `bound` is the rank of the type
// this unfolding came from.
TermRef th_id_prod(const TypeRef& b, const TermRef& c, const TypeRef& cin,
                   const std::optional<Integer>& bound) {
  const Integer rank = th_rank(*b);
  if (bound && !(rank < *bound))
    fail(ErrorCode::Internal, "t_h: rank did not decrease at id_" + to_string(*b));
  switch (b->kind) {
    case K::Zero: {
      TypeRef cout = target_of(*c, cin);
      return plus(id(), seq_all({p(Prim::SwapTimes), p(Prim::Absorb), id(), factorz(cout),
                                 p(Prim::SwapTimes)}));
    }
    case K::One:
      return seq_all({plus(id(), p(Prim::UniteTimes)), th(c, cin), plus(id(), p(Prim::UnitiTimes))});
    case K::Sum:
      return seq_all({plus(id(), p(Prim::Dist)),
                      sum_rule(th_id_prod(b->l, c, cin, rank), th_id_prod(b->r, c, cin, rank)),
                      plus(id(), p(Prim::Factor))});
    case K::Prod: {
      const TypeRef& bl = b->l;
      const TypeRef& b2 = b->r;
      switch (bl->kind) {
        case K::Zero: {
          TypeRef cout = target_of(*c, cin);
          return plus(id(), seq_all({p(Prim::AssocrTimes), p(Prim::SwapTimes), p(Prim::Absorb),
                                     id(), factorz(type_prod(b2, cout)), p(Prim::SwapTimes),
                                     p(Prim::AssoclTimes)}));
        }
        case K::One:
          return seq_all({plus(id(), seq(p(Prim::AssocrTimes), p(Prim::UniteTimes))),
                          th_id_prod(b2, c, cin, rank),
                          plus(id(), seq(p(Prim::UnitiTimes), p(Prim::AssoclTimes)))});
        case K::Sum: {
          TypeRef next = type_sum(type_prod(bl->l, b2), type_prod(bl->r, b2));
          return seq_all({plus(id(), times(p(Prim::Dist), id())), th_id_prod(next, c, cin, rank),
                          plus(id(), times(p(Prim::Factor), id()))});
        }
        case K::Prod: {
          TypeRef next = type_prod(bl->l, type_prod(bl->r, b2));
          return seq_all({plus(id(), times(p(Prim::AssocrTimes), id())),
                          th_id_prod(next, c, cin, rank),
                          plus(id(), times(p(Prim::AssoclTimes), id()))});
        }
      }
    }
  }
  fail(ErrorCode::Internal, "unhandled type");
}

TermRef th(const TermRef& c, const TypeRef& in) {
  const Term& t = *c;
  switch (t.kind) {
    case Term::Kind::Prim:
      target_of(t, in);
      if (t.prim == Prim::Neg1) return seq_all({p(Prim::Had), p(Prim::SwapPlus), p(Prim::Had)});
      return plus(id(), c);
    case Term::Kind::Seq: {
      TermRef first = th(t.l, in);
      return seq(first, th(t.r, target_of(*t.l, in)));
    }
    case Term::Kind::Sum:
      if (in->kind != K::Sum) typecheck(t, in);
      return sum_rule(th(t.l, in->l), th(t.r, in->r));
    case Term::Kind::Prod: {
      if (in->kind != K::Prod) typecheck(t, in);
      if (is_id(*t.l)) return th_id_prod(in->l, t.r, in->r, std::nullopt);
      const TypeRef& b1 = in->l;
      const TypeRef& b2 = in->r;
      TypeRef b3 = target_of(*t.l, b1);
      return seq_all({plus(id(), p(Prim::SwapTimes)), th_id_prod(b2, t.l, b1, std::nullopt),
                      plus(id(), p(Prim::SwapTimes)), th_id_prod(b3, t.r, b2, std::nullopt)});
    }
  }
  fail(ErrorCode::Internal, "unhandled term");
}

}  // namespace

Integer th_rank(const Type& b) {
  switch (b.kind) {
    case K::Zero: return 1;
    case K::One: return 2;
    case K::Sum: return th_rank(*b.l) + th_rank(*b.r);
    case K::Prod: {
      Integer l = th_rank(*b.l) + 1;
      return Integer(l * l * th_rank(*b.r));
    }
  }
  return 0;
}

Word wsem(const Term& c, const TypeRef& input) {
  typecheck(c, input);
  if (!in_language(c, Lang::QPi)) fail(ErrorCode::Domain, "wsem: not a Q-Pi term");
  return wsem_rec(c, input, nullptr);
}

TermRef t_q(const Word& w) {
  validate(w);
  const Word norm = normalize_reversed(w);
  if (norm.gens.empty()) return prim(Prim::Id);
  TermRef out;
  for (auto it = norm.gens.rbegin(); it != norm.gens.rend(); ++it) {
    TermRef part = t_q_gen(*it, norm.n);
    out = out ? seq(out, part) : part;
  }
  return out;
}

TermRef qsem(const TermRef& c) {
  if (!in_language(*c, Lang::HPi)) fail(ErrorCode::Domain, "qsem: not a Hadamard-Pi term");
  return c;
}

TermRef t_h(const TermRef& c, const TypeRef& input) {
  typecheck(*c, input);
  return th(c, input);
}

// ---------------------------------------------------------------------------

std::string TranslationReport::verdict() const {
  if (!holds) return "FAILED: target semantics differs from the expected matrix";
  return relation == Relation::Equal ? "verified: semantics preserved"
                                     : "verified: I\xE2\x82\x81 \xE2\x8A\x95 source";
}

std::string TranslationReport::to_text() const {
  std::string out;
  out += "source: " + source + "\n";
  out += "target: " + target + "\n";
  out += std::string("relation: ") + (relation == Relation::Equal ? "equal" : "padded-equal") + "\n";
  out += "expected:\n" + hpi::to_text(expected);
  out += "actual:\n" + hpi::to_text(actual);
  out += verdict() + "\n";
  return out;
}

namespace {

TranslationReport finish(TranslationReport r) {
  r.holds = r.expected == r.actual;
  return r;
}

}  // namespace

TranslationReport report_wsem(const TermRef& c, const TypeRef& input) {
  TranslationReport r;
  const Word w = wsem(*c, input);
  r.source = to_string(*c);
  r.target = tokens_to_string(w);
  r.expected = sem(*c, input);
  r.actual = word_sem(w);
  return finish(std::move(r));
}

TranslationReport report_t_q(const Word& w) {
  TranslationReport r;
  const TermRef t = t_q(w);
  r.source = tokens_to_string(w);
  r.target = to_string(*t);
  r.expected = word_sem(w);
  r.actual = sem(*t, type_ones(w.n));
  return finish(std::move(r));
}

TranslationReport report_qsem(const TermRef& c, const TypeRef& input) {
  TranslationReport r;
  const TermRef q = qsem(c);
  r.source = to_string(*c);
  r.target = to_string(*q);
  r.expected = sem(*c, input);
  r.actual = sem(*q, input);
  return finish(std::move(r));
}

TranslationReport report_t_h(const TermRef& c, const TypeRef& input) {
  TranslationReport r;
  const TermRef h = t_h(c, input);
  r.source = to_string(*c);
  r.target = to_string(*h);
  r.relation = TranslationReport::Relation::PaddedEqual;
  r.expected = direct_sum(ExactMatrix::identity(1), sem(*c, input));
  r.actual = sem(*h, type_sum(type_one(), input));
  return finish(std::move(r));
}

TranslationReport roundtrip_check(const TermRef& c, const TypeRef& input) {
  TranslationReport r;
  const Word w = wsem(*c, input);
  const TermRef back = t_q(w);
  r.source = to_string(*c);
  r.target = to_string(*back);
  r.expected = sem(*c, input);
  r.actual = sem(*back, type_ones(w.n));
  return finish(std::move(r));
}

}  // namespace hpi
