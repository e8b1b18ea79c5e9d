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

// Value types, combinator terms and their exact semantics.
//
// Types and terms are immutable trees shared through reference-counted
// handles. Typing is input driven: a term is checked against a source type
// and the target type is computed.
//
// Index layout: the summands of b1+b2 occupy indices [0,n1) then [n1,n1+n2);
// the pair (x,y) of b1*b2 sits at index x*n2 + y. Under this layout every
// associator, unitor, distributor and absorber is an identity matrix.
//
// Composition follows the categorical convention: sem(c1 ; c2) is
// sem(c2) * sem(c1).

#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "hpi/linalg.hpp"

namespace hpi {

struct Type;
using TypeRef = std::shared_ptr<const Type>;

struct Type {
  enum class Kind { Zero, One, Sum, Prod };
  Kind kind = Kind::Zero;
  TypeRef l, r;
};

TypeRef type_zero();
TypeRef type_one();
TypeRef type_sum(TypeRef l, TypeRef r);
TypeRef type_prod(TypeRef l, TypeRef r);
/// n*1 as a left-nested sum: 0, 1, 1+1, (1+1)+1, ...
TypeRef type_ones(size_t n);

bool operator==(const Type& x, const Type& y);
size_t hdim(const Type& t);
/// Minimal parentheses, '*' binds tighter than '+', both left associative.
std::string to_string(const Type& t);
/// Grammar: 0, 1, '+', '*' (or U+00D7) and parentheses; left associative.
TypeRef parse_type(std::string_view text);

// ---------------------------------------------------------------------------
// Terms

enum class Prim {
  Id,
  SwapPlus,
  AssocrPlus,
  AssoclPlus,
  UnitePlus,
  UnitiPlus,
  SwapTimes,
  AssocrTimes,
  AssoclTimes,
  UniteTimes,
  UnitiTimes,
  Dist,
  Factor,
  Absorb,
  Factorz,
  Neg1,
  Had,
};

const char* to_string(Prim p) noexcept;

struct Term;
using TermRef = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Prim, Seq, Sum, Prod };
  Kind kind = Kind::Prim;
  Prim prim = Prim::Id;
  /// factorz only: the b of 0 <-> b*0. Null means 0.
  TypeRef annot;
  TermRef l, r;
};

TermRef prim(Prim p);
TermRef factorz(TypeRef target);
TermRef seq(TermRef l, TermRef r);
TermRef plus(TermRef l, TermRef r);
TermRef times(TermRef l, TermRef r);
/// Left-nested composition of all arguments.
TermRef seq_all(std::initializer_list<TermRef> parts);

bool operator==(const Term& x, const Term& y);
size_t term_size(const Term& t);

enum class Lang { Pi, QPi, HPi };
const char* to_string(Lang l) noexcept;
/// "pi", "qpi" or "hpi".
Lang parse_lang(std::string_view text);
/// neg1 belongs to Q-Pi only, had to Q-Pi and Hadamard-Pi.
bool in_language(const Term& t, Lang lang);

/// Minimal parentheses. Precedence '*' over '+' over ';', all left
/// associative. factorz prints its target as factorz[b].
std::string to_string(const Term& t);
/// Also accepts "hadamard" for had, "(-1)" for neg1, '×' and '⨾', and a
/// postfix power c^m that expands to c ; (c ; (... ; c)) with c^0 = id.
/// Primitives outside `lang` are a Parse error.
TermRef parse_term(std::string_view text, Lang lang);

// ---------------------------------------------------------------------------
// Typing and semantics

struct CombinatorType {
  TypeRef src, dst;
};

/// Throws Type with the path to the offending subterm, written as child
/// positions from the root (e.g. "2.1").
CombinatorType typecheck(const Term& c, const TypeRef& input);

/// The matrix of dimension hdim(input).
ExactMatrix sem(const Term& c, const TypeRef& input);

/// A term whose semantics is the inverse. The input type is needed to
/// annotate factorz when inverting absorb.
TermRef inverse(const TermRef& c, const TypeRef& input);

/// Throws Type if the two terms have different target types.
bool equiv_terms(const Term& c1, const Term& c2, const TypeRef& input);

// ---------------------------------------------------------------------------
// Derived combinators

/// dist ; (id + (id * c)) ; factor on (1+1)*b.
TermRef ctrl(TermRef c);
TermRef gate_x();
TermRef gate_h();
TermRef gate_cx();
TermRef gate_ch();
TermRef gate_ccx();

/// ((c + id) + id) ... with m copies of id.
TermRef pad_right(TermRef c, size_t m);
/// A term on type_ones(n) whose semantics is the transposition (j k);
/// swap_plus_at(j, j, n) is id. Throws Index for indices outside [1,n].
TermRef swap_plus_at(size_t j, size_t k, size_t n);
/// c ; (c ; (... ; c)), m copies; id for m = 0.
TermRef iterate(TermRef c, size_t m);

}  // namespace hpi
