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

#include <gtest/gtest.h>

#include "hpi/error.hpp"
#include "hpi/lang.hpp"
#include "test_support.hpp"

namespace hpi {
namespace {

TypeRef ty(std::string_view s) { return parse_type(s); }
TermRef qt(std::string_view s) { return parse_term(s, Lang::QPi); }

ExactMatrix ints(size_t n, std::vector<long> v) {
  std::vector<RingInt> num(v.begin(), v.end());
  return ExactMatrix::from_numerators(n, std::move(num), 0);
}

ExactMatrix hadamard() { return ExactMatrix::from_numerators(2, {1, 1, 1, -1}, 1); }

TEST(Types, DimensionAndText) {
  EXPECT_EQ(hdim(*ty("1+1")), 2u);
  EXPECT_EQ(hdim(*ty("(1+1)*(1+1)")), 4u);
  EXPECT_EQ(hdim(*ty("0*(1+1+1)")), 0u);
  EXPECT_EQ(to_string(*ty("(1+1)*1")), "(1+1)*1");
  EXPECT_EQ(to_string(*ty("1*1+1*1")), "1*1+1*1");
  EXPECT_EQ(to_string(*ty("1+(1+1)")), "1+(1+1)");
  EXPECT_EQ(to_string(*type_ones(3)), "1+1+1");
  EXPECT_EQ(to_string(*ty("1 \xC3\x97 1")), "1*1");
  EXPECT_THROW(parse_type("1+"), Error);
  EXPECT_THROW(parse_type("2"), Error);
}

TEST(Terms, ParseAndPrint) {
  EXPECT_EQ(to_string(*qt("had ; swap+ ; had")), "had ; swap+ ; had");
  EXPECT_EQ(to_string(*qt("id + swap+ * had")), "id + swap+ * had");
  EXPECT_EQ(to_string(*qt("(id + swap+) * had")), "(id + swap+) * had");
  EXPECT_EQ(to_string(*qt("id ; (had ; had)")), "id ; (had ; had)");
  EXPECT_EQ(to_string(*qt("hadamard")), "had");
  EXPECT_EQ(to_string(*qt("(-1)")), "neg1");
  EXPECT_EQ(to_string(*qt("had^3")), "had ; (had ; had)");
  EXPECT_EQ(to_string(*qt("had^0")), "id");
  EXPECT_EQ(to_string(*qt("factorz[1+1]")), "factorz[1+1]");
  EXPECT_EQ(*qt(to_string(*gate_ccx())), *gate_ccx());
  EXPECT_THROW(parse_term("neg1", Lang::HPi), Error);
  EXPECT_THROW(parse_term("had", Lang::Pi), Error);
  EXPECT_THROW(parse_term("swap", Lang::Pi), Error);
  EXPECT_THROW(parse_term("frob", Lang::Pi), Error);
  EXPECT_THROW(parse_term("id ;", Lang::Pi), Error);
}

TEST(Typing, Examples) {
  const CombinatorType h = typecheck(*qt("had"), ty("1+1"));
  EXPECT_EQ(to_string(*h.src), "1+1");
  EXPECT_EQ(to_string(*h.dst), "1+1");
  EXPECT_EQ(to_string(*typecheck(*qt("dist"), ty("(1+1)*1")).dst), "1*1+1*1");
  EXPECT_EQ(to_string(*typecheck(*qt("factorz[1]"), type_zero()).dst), "1*0");
  try {
    typecheck(*qt("had ; swap*"), ty("1+1"));
    FAIL() << "expected a type error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Type);
    EXPECT_NE(std::string(e.what()).find("'swap*' (path 2)"), std::string::npos) << e.what();
  }
  EXPECT_THROW(typecheck(*qt("swap*"), ty("1+1")), Error);
  EXPECT_THROW(typecheck(*qt("factor"), ty("1*1+1*(1+1)")), Error);
}

TEST(Semantics, Primitives) {
  EXPECT_EQ(sem(*qt("had"), ty("1+1")), hadamard());
  EXPECT_EQ(sem(*qt("neg1"), ty("1")), ints(1, {-1}));
  EXPECT_TRUE(sem(*qt("had ; had"), ty("1+1")).is_identity());
  EXPECT_EQ(sem(*qt("swap+"), ty("1+1")), ints(2, {0, 1, 1, 0}));
  EXPECT_TRUE(sem(*qt("id"), ty("1")).is_identity());
  // swap+ on 1+(1+1): e_1 -> e_3, e_2 -> e_1, e_3 -> e_2.
  EXPECT_EQ(sem(*qt("swap+"), ty("1+(1+1)")), ints(3, {0, 1, 0, 0, 0, 1, 1, 0, 0}));
  // swap* on (1+1)*(1+1+1): index x*3+y goes to y*2+x.
  const ExactMatrix st = sem(*qt("swap*"), ty("(1+1)*(1+1+1)"));
  for (size_t x = 0; x < 2; ++x)
    for (size_t y = 0; y < 3; ++y) EXPECT_TRUE(st.num(y * 2 + x, x * 3 + y).is_one());
  EXPECT_EQ(sem(*qt("absorb"), ty("(1+1)*0")).dim(), 0u);
}

TEST(Semantics, CompositionOrder) {
  // sem(c1 ; c2) = sem(c2) * sem(c1)
  const TypeRef t = ty("1+1");
  const TermRef c1 = qt("had"), c2 = qt("id + neg1");
  EXPECT_EQ(sem(*seq(c1, c2), t), sem(*c2, t) * sem(*c1, t));
  EXPECT_NE(sem(*seq(c1, c2), t), sem(*c1, t) * sem(*c2, t));
}

TEST(Semantics, RandomTermsAreOrthogonalAndInvertible) {
  testing::Rng rng(17);
  for (int i = 0; i < 150; ++i) {
    const TypeRef in = testing::random_type(rng, 8, 3, true);
    const testing::Typed t = testing::random_term(rng, in, Lang::QPi, 4);
    const ExactMatrix m = sem(*t.term, in);
    EXPECT_TRUE(is_orthogonal(m)) << to_string(*t.term);
    const TermRef inv = inverse(t.term, in);
    EXPECT_TRUE((sem(*inv, t.dst) * m).is_identity()) << to_string(*t.term);
    EXPECT_EQ(*parse_term(to_string(*t.term), Lang::QPi), *t.term);
  }
}

TEST(Semantics, Functoriality) {
  testing::Rng rng(23);
  for (int i = 0; i < 80; ++i) {
    const TypeRef a = testing::random_type(rng, 4, 2), b = testing::random_type(rng, 4, 2);
    const testing::Typed c1 = testing::random_term(rng, a, Lang::QPi, 3);
    const testing::Typed c2 = testing::random_term(rng, b, Lang::QPi, 3);
    EXPECT_EQ(sem(*plus(c1.term, c2.term), type_sum(a, b)),
              direct_sum(sem(*c1.term, a), sem(*c2.term, b)));
    EXPECT_EQ(sem(*times(c1.term, c2.term), type_prod(a, b)),
              tensor(sem(*c1.term, a), sem(*c2.term, b)));
  }
}

TEST(Equivalence, Examples) {
  const TypeRef t = ty("1+1");
  EXPECT_TRUE(equiv_terms(*qt("had^2"), *qt("id"), t));
  EXPECT_TRUE(equiv_terms(*qt("had ; swap+ ; had"), *qt("id + neg1"), t));
  EXPECT_TRUE(equiv_terms(*qt("(had ; swap+)^8"), *qt("id"), t));
  EXPECT_FALSE(equiv_terms(*qt("had"), *qt("swap+"), t));
  EXPECT_THROW(equiv_terms(*qt("id"), *qt("uniti+"), t), Error);
}

TEST(Derived, Gates) {
  const TypeRef two = ty("1+1");
  const TypeRef four = type_prod(two, two);
  const ExactMatrix x = ints(2, {0, 1, 1, 0});
  EXPECT_EQ(sem(*gate_cx(), four), direct_sum(ExactMatrix::identity(2), x));
  EXPECT_TRUE(sem(*ctrl(prim(Prim::Id)), four).is_identity());
  EXPECT_EQ(sem(*gate_ch(), four), direct_sum(ExactMatrix::identity(2), hadamard()));
}

TEST(Derived, SwapPlusAt) {
  const ExactMatrix x = ints(2, {0, 1, 1, 0});
  for (size_t n = 1; n <= 7; ++n)
    for (size_t j = 1; j <= n; ++j)
      for (size_t k = 1; k <= n; ++k) {
        const TermRef t = swap_plus_at(j, k, n);
        const ExactMatrix m = sem(*t, type_ones(n));
        if (j == k) {
          EXPECT_TRUE(m.is_identity());
          continue;
        }
        const unsigned rows[] = {static_cast<unsigned>(j), static_cast<unsigned>(k)};
        EXPECT_EQ(m, m_level_embed(x, rows, n)) << j << " " << k << " " << n;
        EXPECT_EQ(to_string(*typecheck(*t, type_ones(n)).dst), to_string(*type_ones(n)));
      }
  EXPECT_THROW(swap_plus_at(0, 1, 3), Error);
  EXPECT_THROW(swap_plus_at(1, 4, 3), Error);
}

TEST(Derived, Iterate) {
  EXPECT_EQ(*iterate(qt("had"), 0), *qt("id"));
  EXPECT_EQ(*iterate(qt("had"), 1), *qt("had"));
  EXPECT_EQ(*iterate(qt("had"), 2), *qt("had ; had"));
}

TEST(Language, Membership) {
  EXPECT_TRUE(in_language(*qt("swap+ ; dist"), Lang::Pi));
  EXPECT_FALSE(in_language(*qt("had"), Lang::Pi));
  EXPECT_TRUE(in_language(*qt("had"), Lang::HPi));
  EXPECT_FALSE(in_language(*qt("id + neg1"), Lang::HPi));
  EXPECT_EQ(parse_lang("hpi"), Lang::HPi);
  EXPECT_THROW(parse_lang("python"), Error);
}

}  // namespace
}  // namespace hpi
