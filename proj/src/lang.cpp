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

#include "hpi/lang.hpp"

#include <array>
#include <cctype>
#include <utility>
#include <vector>

#include "hpi/error.hpp"

namespace hpi {

using K = Type::Kind;

TypeRef type_zero() {
  static const TypeRef z = std::make_shared<const Type>(Type{K::Zero, nullptr, nullptr});
  return z;
}

TypeRef type_one() {
  static const TypeRef o = std::make_shared<const Type>(Type{K::One, nullptr, nullptr});
  return o;
}

TypeRef type_sum(TypeRef l, TypeRef r) {
  return std::make_shared<const Type>(Type{K::Sum, std::move(l), std::move(r)});
}

TypeRef type_prod(TypeRef l, TypeRef r) {
  return std::make_shared<const Type>(Type{K::Prod, std::move(l), std::move(r)});
}

TypeRef type_ones(size_t n) {
  if (n == 0) return type_zero();
  TypeRef t = type_one();
  for (size_t i = 1; i < n; ++i) t = type_sum(t, type_one());
  return t;
}

bool operator==(const Type& x, const Type& y) {
  if (&x == &y) return true;
  if (x.kind != y.kind) return false;
  if (x.kind == K::Zero || x.kind == K::One) return true;
  return *x.l == *y.l && *x.r == *y.r;
}

size_t hdim(const Type& t) {
  switch (t.kind) {
    case K::Zero: return 0;
    case K::One: return 1;
    case K::Sum: return hdim(*t.l) + hdim(*t.r);
    case K::Prod: return hdim(*t.l) * hdim(*t.r);
  }
  return 0;
}

namespace {

int type_prec(const Type& t) {
  switch (t.kind) {
    case K::Sum: return 1;
    case K::Prod: return 2;
    default: return 3;
  }
}

void print_type(const Type& t, int ctx, std::string& out) {
  const int p = type_prec(t);
  const bool wrap = p < ctx;
  if (wrap) out += '(';
  switch (t.kind) {
    case K::Zero: out += '0'; break;
    case K::One: out += '1'; break;
    case K::Sum:
      print_type(*t.l, 1, out);
      out += '+';
      print_type(*t.r, 2, out);
      break;
    case K::Prod:
      print_type(*t.l, 2, out);
      out += '*';
      print_type(*t.r, 3, out);
      break;
  }
  if (wrap) out += ')';
}

// Shared lexer for types and terms.
class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  bool accept(std::string_view tok) {
    skip();
    if (s_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }
  bool accept_times() { return accept("*") || accept("\xC3\x97"); }
  bool accept_seq() { return accept(";") || accept("\xE2\xA8\xBE"); }
  void expect(std::string_view tok) {
    if (!accept(tok)) error("expected '" + std::string(tok) + "'");
  }
  size_t number() {
    skip();
    const size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }
  std::string word() {
    skip();
    const size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  // Suffix character glued to the previous word, e.g. the '+' of "swap+".
  char glued_suffix() {
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '*')) return s_[pos_++];
    if (s_.substr(pos_, 2) == "\xC3\x97") {
      pos_ += 2;
      return '*';
    }
    return 0;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorCode::Parse,
         what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
};

TypeRef parse_type_sum(Lexer& lx);

TypeRef parse_type_atom(Lexer& lx) {
  if (lx.accept("(")) {
    TypeRef t = parse_type_sum(lx);
    lx.expect(")");
    return t;
  }
  if (lx.accept("0")) return type_zero();
  if (lx.accept("1")) return type_one();
  lx.error("expected a type");
}

TypeRef parse_type_prod(Lexer& lx) {
  TypeRef t = parse_type_atom(lx);
  while (lx.accept_times()) t = type_prod(t, parse_type_atom(lx));
  return t;
}

TypeRef parse_type_sum(Lexer& lx) {
  TypeRef t = parse_type_prod(lx);
  while (lx.accept("+")) t = type_sum(t, parse_type_prod(lx));
  return t;
}

}  // namespace

std::string to_string(const Type& t) {
  std::string out;
  print_type(t, 0, out);
  return out;
}

TypeRef parse_type(std::string_view text) {
  Lexer lx(text);
  TypeRef t = parse_type_sum(lx);
  if (!lx.at_end()) lx.error("trailing input after type");
  return t;
}

// ---------------------------------------------------------------------------
// Terms

namespace {

constexpr std::array<std::pair<Prim, const char*>, 17> kPrimNames{{
    {Prim::Id, "id"},
    {Prim::SwapPlus, "swap+"},
    {Prim::AssocrPlus, "assocr+"},
    {Prim::AssoclPlus, "assocl+"},
    {Prim::UnitePlus, "unite+"},
    {Prim::UnitiPlus, "uniti+"},
    {Prim::SwapTimes, "swap*"},
    {Prim::AssocrTimes, "assocr*"},
    {Prim::AssoclTimes, "assocl*"},
    {Prim::UniteTimes, "unite*"},
    {Prim::UnitiTimes, "uniti*"},
    {Prim::Dist, "dist"},
    {Prim::Factor, "factor"},
    {Prim::Absorb, "absorb"},
    {Prim::Factorz, "factorz"},
    {Prim::Neg1, "neg1"},
    {Prim::Had, "had"},
}};

TermRef make(Term t) { return std::make_shared<const Term>(std::move(t)); }

}  // namespace

const char* to_string(Prim p) noexcept {
  for (const auto& [prim, name] : kPrimNames)
    if (prim == p) return name;
  return "?";
}

TermRef prim(Prim p) {
  Term t;
  t.prim = p;
  return make(std::move(t));
}

TermRef factorz(TypeRef target) {
  Term t;
  t.prim = Prim::Factorz;
  t.annot = std::move(target);
  return make(std::move(t));
}

TermRef seq(TermRef l, TermRef r) {
  Term t;
  t.kind = Term::Kind::Seq;
  t.l = std::move(l);
  t.r = std::move(r);
  return make(std::move(t));
}

TermRef plus(TermRef l, TermRef r) {
  Term t;
  t.kind = Term::Kind::Sum;
  t.l = std::move(l);
  t.r = std::move(r);
  return make(std::move(t));
}

TermRef times(TermRef l, TermRef r) {
  Term t;
  t.kind = Term::Kind::Prod;
  t.l = std::move(l);
  t.r = std::move(r);
  return make(std::move(t));
}

TermRef seq_all(std::initializer_list<TermRef> parts) {
  TermRef out;
  for (const TermRef& p : parts) out = out ? seq(out, p) : p;
  return out ? out : prim(Prim::Id);
}

namespace {

const Type& annot_or_zero(const Term& t) { return t.annot ? *t.annot : *type_zero(); }

}  // namespace

bool operator==(const Term& x, const Term& y) {
  if (&x == &y) return true;
  if (x.kind != y.kind) return false;
  if (x.kind == Term::Kind::Prim) {
    if (x.prim != y.prim) return false;
    return x.prim != Prim::Factorz || annot_or_zero(x) == annot_or_zero(y);
  }
  return *x.l == *y.l && *x.r == *y.r;
}

size_t term_size(const Term& t) {
  if (t.kind == Term::Kind::Prim) return 1;
  return 1 + term_size(*t.l) + term_size(*t.r);
}

const char* to_string(Lang l) noexcept {
  switch (l) {
    case Lang::Pi: return "pi";
    case Lang::QPi: return "qpi";
    case Lang::HPi: return "hpi";
  }
  return "?";
}

Lang parse_lang(std::string_view text) {
  if (text == "pi") return Lang::Pi;
  if (text == "qpi") return Lang::QPi;
  if (text == "hpi") return Lang::HPi;
  fail(ErrorCode::Parse, "unknown language '" + std::string(text) + "' (pi, qpi, hpi)");
}

namespace {

bool prim_in_language(Prim p, Lang lang) {
  if (p == Prim::Neg1) return lang == Lang::QPi;
  if (p == Prim::Had) return lang != Lang::Pi;
  return true;
}

}  // namespace

bool in_language(const Term& t, Lang lang) {
  if (t.kind == Term::Kind::Prim) return prim_in_language(t.prim, lang);
  return in_language(*t.l, lang) && in_language(*t.r, lang);
}

namespace {

int term_prec(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Seq: return 0;
    case Term::Kind::Sum: return 1;
    case Term::Kind::Prod: return 2;
    default: return 3;
  }
}

void print_term(const Term& t, int ctx, std::string& out) {
  const int p = term_prec(t);
  const bool wrap = p < ctx;
  if (wrap) out += '(';
  switch (t.kind) {
    case Term::Kind::Prim:
      out += to_string(t.prim);
      if (t.prim == Prim::Factorz && t.annot) out += "[" + to_string(*t.annot) + "]";
      break;
    case Term::Kind::Seq:
      print_term(*t.l, 0, out);
      out += " ; ";
      print_term(*t.r, 1, out);
      break;
    case Term::Kind::Sum:
      print_term(*t.l, 1, out);
      out += " + ";
      print_term(*t.r, 2, out);
      break;
    case Term::Kind::Prod:
      print_term(*t.l, 2, out);
      out += " * ";
      print_term(*t.r, 3, out);
      break;
  }
  if (wrap) out += ')';
}

class TermParser {
 public:
  TermParser(std::string_view text, Lang lang) : lx_(text), lang_(lang) {}

  TermRef parse() {
    TermRef t = parse_seq();
    if (!lx_.at_end()) lx_.error("trailing input after term");
    return t;
  }

 private:
  TermRef parse_seq() {
    TermRef t = parse_sum();
    while (lx_.accept_seq()) t = seq(t, parse_sum());
    return t;
  }
  TermRef parse_sum() {
    TermRef t = parse_prod();
    while (lx_.accept("+")) t = plus(t, parse_prod());
    return t;
  }
  TermRef parse_prod() {
    TermRef t = parse_postfix();
    while (lx_.accept_times()) t = times(t, parse_postfix());
    return t;
  }
  TermRef parse_postfix() {
    TermRef t = parse_atom();
    while (lx_.accept("^")) t = iterate(t, lx_.number());
    return t;
  }
  TermRef parse_atom() {
    if (lx_.accept("(")) {
      if (lx_.accept("-1")) {
        lx_.expect(")");
        return checked(Prim::Neg1);
      }
      TermRef t = parse_seq();
      lx_.expect(")");
      return t;
    }
    std::string name = lx_.word();
    if (name.empty()) lx_.error("expected a term");
    if (name == "swap" || name == "assocr" || name == "assocl" || name == "unite" ||
        name == "uniti") {
      const char suffix = lx_.glued_suffix();
      if (!suffix) lx_.error("'" + name + "' needs a '+' or '*' suffix");
      name += suffix;
    }
    if (name == "hadamard") name = "had";
    for (const auto& [p, pname] : kPrimNames) {
      if (name != pname) continue;
      if (p == Prim::Factorz && lx_.accept("[")) {
        TypeRef b = parse_type_sum(lx_);
        lx_.expect("]");
        checked(p);
        return factorz(std::move(b));
      }
      return checked(p);
    }
    lx_.error("unknown primitive '" + name + "'");
  }
  TermRef checked(Prim p) {
    if (!prim_in_language(p, lang_))
      lx_.error(std::string("'") + to_string(p) + "' is not part of " + to_string(lang_));
    return prim(p);
  }

  Lexer lx_;
  Lang lang_;
};

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print_term(t, 0, out);
  return out;
}

TermRef parse_term(std::string_view text, Lang lang) { return TermParser(text, lang).parse(); }

// ---------------------------------------------------------------------------
// Typing

namespace {

std::string child_path(const std::string& path, int child) {
  return path.empty() ? std::to_string(child) : path + "." + std::to_string(child);
}

[[noreturn]] void type_error(const Term& t, const std::string& path, const std::string& what,
                             const Type& got) {
  fail(ErrorCode::Type, "type error at '" + to_string(t) + "' (path " +
                            (path.empty() ? std::string("root") : path) + "): " + what +
                            ", got " + to_string(got));
}

TypeRef prim_target(const Term& t, const TypeRef& in, const std::string& path) {
  const Type& b = *in;
  auto need = [&](bool ok, const char* shape) {
    if (!ok) type_error(t, path, std::string(to_string(t.prim)) + " expects " + shape, b);
  };
  switch (t.prim) {
    case Prim::Id: return in;
    case Prim::SwapPlus:
      need(b.kind == K::Sum, "b1+b2");
      return type_sum(b.r, b.l);
    case Prim::AssocrPlus:
      need(b.kind == K::Sum && b.l->kind == K::Sum, "(b1+b2)+b3");
      return type_sum(b.l->l, type_sum(b.l->r, b.r));
    case Prim::AssoclPlus:
      need(b.kind == K::Sum && b.r->kind == K::Sum, "b1+(b2+b3)");
      return type_sum(type_sum(b.l, b.r->l), b.r->r);
    case Prim::UnitePlus:
      need(b.kind == K::Sum && b.l->kind == K::Zero, "0+b");
      return b.r;
    case Prim::UnitiPlus: return type_sum(type_zero(), in);
    case Prim::SwapTimes:
      need(b.kind == K::Prod, "b1*b2");
      return type_prod(b.r, b.l);
    case Prim::AssocrTimes:
      need(b.kind == K::Prod && b.l->kind == K::Prod, "(b1*b2)*b3");
      return type_prod(b.l->l, type_prod(b.l->r, b.r));
    case Prim::AssoclTimes:
      need(b.kind == K::Prod && b.r->kind == K::Prod, "b1*(b2*b3)");
      return type_prod(type_prod(b.l, b.r->l), b.r->r);
    case Prim::UniteTimes:
      need(b.kind == K::Prod && b.l->kind == K::One, "1*b");
      return b.r;
    case Prim::UnitiTimes: return type_prod(type_one(), in);
    case Prim::Dist:
      need(b.kind == K::Prod && b.l->kind == K::Sum, "(b1+b2)*b3");
      return type_sum(type_prod(b.l->l, b.r), type_prod(b.l->r, b.r));
    case Prim::Factor:
      need(b.kind == K::Sum && b.l->kind == K::Prod && b.r->kind == K::Prod &&
               *b.l->r == *b.r->r,
           "(b1*b3)+(b2*b3)");
      return type_prod(type_sum(b.l->l, b.r->l), b.l->r);
    case Prim::Absorb:
      need(b.kind == K::Prod && b.r->kind == K::Zero, "b*0");
      return type_zero();
    case Prim::Factorz:
      need(b.kind == K::Zero, "0");
      return type_prod(t.annot ? t.annot : type_zero(), type_zero());
    case Prim::Neg1:
      need(b.kind == K::One, "1");
      return in;
    case Prim::Had:
      need(b.kind == K::Sum && b.l->kind == K::One && b.r->kind == K::One, "1+1");
      return in;
  }
  fail(ErrorCode::Internal, "unhandled primitive");
}

TypeRef check(const Term& t, const TypeRef& in, const std::string& path) {
  switch (t.kind) {
    case Term::Kind::Prim: return prim_target(t, in, path);
    case Term::Kind::Seq: {
      TypeRef mid = check(*t.l, in, child_path(path, 1));
      return check(*t.r, mid, child_path(path, 2));
    }
    case Term::Kind::Sum:
      if (in->kind != K::Sum) type_error(t, path, "a sum of terms expects b1+b2", *in);
      return type_sum(check(*t.l, in->l, child_path(path, 1)),
                      check(*t.r, in->r, child_path(path, 2)));
    case Term::Kind::Prod:
      if (in->kind != K::Prod) type_error(t, path, "a product of terms expects b1*b2", *in);
      return type_prod(check(*t.l, in->l, child_path(path, 1)),
                       check(*t.r, in->r, child_path(path, 2)));
  }
  fail(ErrorCode::Internal, "unhandled term");
}

// Semantics of a primitive already known to accept `in`.
ExactMatrix prim_sem(Prim p, const Type& in) {
  const size_t n = hdim(in);
  switch (p) {
    case Prim::SwapPlus: {
      const size_t n1 = hdim(*in.l), n2 = hdim(*in.r);
      std::vector<unsigned> perm(n);
      for (size_t j = 0; j < n; ++j)
        perm[j] = static_cast<unsigned>((j < n1 ? j + n2 : j - n1) + 1);
      return permutation_matrix(perm);
    }
    case Prim::SwapTimes: {
      const size_t n1 = hdim(*in.l), n2 = hdim(*in.r);
      std::vector<unsigned> perm(n);
      for (size_t j = 0; j < n; ++j) perm[j] = static_cast<unsigned>((j % n2) * n1 + j / n2 + 1);
      return permutation_matrix(perm);
    }
    case Prim::Neg1: return ExactMatrix::from_numerators(1, {RingInt(-1)}, 0);
    case Prim::Had: return generator_matrix(Generator::h(1, 2), 2);
    default: return ExactMatrix::identity(n);
  }
}

ExactMatrix eval(const Term& t, const TypeRef& in, TypeRef* out) {
  switch (t.kind) {
    case Term::Kind::Prim: {
      TypeRef dst = prim_target(t, in, "");
      if (out) *out = dst;
      return prim_sem(t.prim, *in);
    }
    case Term::Kind::Seq: {
      TypeRef mid;
      ExactMatrix m1 = eval(*t.l, in, &mid);
      ExactMatrix m2 = eval(*t.r, mid, out);
      return m2 * m1;
    }
    case Term::Kind::Sum: {
      TypeRef o1, o2;
      ExactMatrix m = direct_sum(eval(*t.l, in->l, &o1), eval(*t.r, in->r, &o2));
      if (out) *out = type_sum(o1, o2);
      return m;
    }
    case Term::Kind::Prod: {
      TypeRef o1, o2;
      ExactMatrix m = tensor(eval(*t.l, in->l, &o1), eval(*t.r, in->r, &o2));
      if (out) *out = type_prod(o1, o2);
      return m;
    }
  }
  fail(ErrorCode::Internal, "unhandled term");
}

TermRef invert(const TermRef& c, const TypeRef& in, TypeRef* out) {
  const Term& t = *c;
  switch (t.kind) {
    case Term::Kind::Prim: {
      TypeRef dst = prim_target(t, in, "");
      if (out) *out = dst;
      switch (t.prim) {
        case Prim::AssocrPlus: return prim(Prim::AssoclPlus);
        case Prim::AssoclPlus: return prim(Prim::AssocrPlus);
        case Prim::UnitePlus: return prim(Prim::UnitiPlus);
        case Prim::UnitiPlus: return prim(Prim::UnitePlus);
        case Prim::AssocrTimes: return prim(Prim::AssoclTimes);
        case Prim::AssoclTimes: return prim(Prim::AssocrTimes);
        case Prim::UniteTimes: return prim(Prim::UnitiTimes);
        case Prim::UnitiTimes: return prim(Prim::UniteTimes);
        case Prim::Dist: return prim(Prim::Factor);
        case Prim::Factor: return prim(Prim::Dist);
        case Prim::Absorb: return factorz(in->l);
        case Prim::Factorz: return prim(Prim::Absorb);
        default: return c;
      }
    }
    case Term::Kind::Seq: {
      TypeRef mid;
      TermRef i1 = invert(t.l, in, &mid);
      TermRef i2 = invert(t.r, mid, out);
      return seq(i2, i1);
    }
    case Term::Kind::Sum: {
      TypeRef o1, o2;
      TermRef i = plus(invert(t.l, in->l, &o1), invert(t.r, in->r, &o2));
      if (out) *out = type_sum(o1, o2);
      return i;
    }
    case Term::Kind::Prod: {
      TypeRef o1, o2;
      TermRef i = times(invert(t.l, in->l, &o1), invert(t.r, in->r, &o2));
      if (out) *out = type_prod(o1, o2);
      return i;
    }
  }
  fail(ErrorCode::Internal, "unhandled term");
}

}  // namespace

CombinatorType typecheck(const Term& c, const TypeRef& input) {
  return {input, check(c, input, "")};
}

ExactMatrix sem(const Term& c, const TypeRef& input) {
  typecheck(c, input);
  return eval(c, input, nullptr);
}

TermRef inverse(const TermRef& c, const TypeRef& input) {
  typecheck(*c, input);
  return invert(c, input, nullptr);
}

bool equiv_terms(const Term& c1, const Term& c2, const TypeRef& input) {
  const CombinatorType t1 = typecheck(c1, input);
  const CombinatorType t2 = typecheck(c2, input);
  if (!(*t1.dst == *t2.dst))
    fail(ErrorCode::Type, "terms have different target types: " + to_string(*t1.dst) + " and " +
                              to_string(*t2.dst));
  return eval(c1, input, nullptr) == eval(c2, input, nullptr);
}

// ---------------------------------------------------------------------------
// Derived combinators

TermRef ctrl(TermRef c) {
  return seq_all({prim(Prim::Dist), plus(prim(Prim::Id), times(prim(Prim::Id), std::move(c))),
                  prim(Prim::Factor)});
}

TermRef gate_x() { return prim(Prim::SwapPlus); }
TermRef gate_h() { return prim(Prim::Had); }
TermRef gate_cx() { return ctrl(gate_x()); }
TermRef gate_ch() { return ctrl(gate_h()); }
TermRef gate_ccx() { return ctrl(gate_cx()); }

TermRef pad_right(TermRef c, size_t m) {
  for (size_t i = 0; i < m; ++i) c = plus(c, prim(Prim::Id));
  return c;
}

namespace {

// Transposition (k k+1) on type_ones(n), 1 <= k < n.
TermRef adjacent_swap(size_t k, size_t n) {
  const size_t pad = n - k - 1;
  if (k == 1) return pad_right(prim(Prim::SwapPlus), pad);
  return seq_all({pad_right(prim(Prim::AssocrPlus), pad),
                  pad_right(plus(prim(Prim::Id), prim(Prim::SwapPlus)), pad),
                  pad_right(prim(Prim::AssoclPlus), pad)});
}

// Transposition (k n) on type_ones(n).
TermRef swap_to_last(size_t k, size_t n) {
  if (k == n) return prim(Prim::Id);
  if (k + 1 == n) return adjacent_swap(k, n);
  TermRef adj = adjacent_swap(k, n);
  return seq_all({adj, swap_to_last(k + 1, n), adj});
}

}  // namespace

TermRef swap_plus_at(size_t j, size_t k, size_t n) {
  if (j < 1 || k < 1 || j > n || k > n)
    fail(ErrorCode::Index, "swap_plus_at: indices " + std::to_string(j) + "," + std::to_string(k) +
                               " outside [1," + std::to_string(n) + "]");
  if (j == k) return prim(Prim::Id);
  if (j > k) std::swap(j, k);
  if (k == n) return swap_to_last(j, n);
  TermRef sk = swap_to_last(k, n);
  return seq_all({sk, swap_to_last(j, n), sk});
}

TermRef iterate(TermRef c, size_t m) {
  if (m == 0) return prim(Prim::Id);
  TermRef out = c;
  for (size_t i = 1; i < m; ++i) out = seq(c, out);
  return out;
}

}  // namespace hpi
