/*
 * Copyright (c) 2026, The BitSim Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include "bitsim/generate.hpp"
#include "bitsim/oracle.hpp"
#include "bitsim/similarity.hpp"
#include "fixtures.hpp"

namespace bitsim {
namespace {

class Subsumes : public ::testing::Test {
 protected:
  EncodingContext ctx = build_context(testing::diamond());
  Verdict v(const char* a, const char* b) const {
    return subsumes(encode(*parse_expr(a), ctx), encode(*parse_expr(b), ctx));
  }
};

TEST_F(Subsumes, Atomics) {
  EXPECT_EQ(v("D", "B"), Verdict::True);
  EXPECT_EQ(v("B", "C"), Verdict::False);
  EXPECT_EQ(v("A", "A"), Verdict::True);
  EXPECT_EQ(v("A", "D"), Verdict::False);
}

TEST_F(Subsumes, Extremes) {
  EXPECT_EQ(v("bot", "B"), Verdict::True);
  EXPECT_EQ(v("B", "top"), Verdict::True);
  EXPECT_EQ(v("top", "B"), Verdict::False);
  EXPECT_EQ(v("B", "bot"), Verdict::False);
}

TEST_F(Subsumes, Compounds) {
  EXPECT_EQ(v("B", "or(B, C)"), Verdict::True);
  EXPECT_EQ(v("and(B, C)", "C"), Verdict::True);
  EXPECT_NE(v("D", "and(B, C)"), Verdict::False);
  EXPECT_NE(v("and(or(A, B), C)", "C"), Verdict::False);
  EXPECT_EQ(v("or(B, C)", "D"), Verdict::False);
}

TEST(SubsumesVsOracle, NoDecisiveDisagreementOnRandomHierarchies) {
  Rng rng(77);
  int decided = 0;
  for (int t = 0; t < 20; ++t) {
    DagShape shape;
    shape.atoms = rng.range(3, 8);
    const TBox tbox = random_dag_tbox(rng, shape);
    const EncodingContext ctx = build_context(tbox);
    for (int k = 0; k < 100; ++k) {
      const ConceptPtr a = random_expr(rng, tbox, rng.range(0, 2), ExprFlavor::Propositional);
      const ConceptPtr b = random_expr(rng, tbox, rng.range(0, 2), ExprFlavor::Propositional);
      const Verdict got = subsumes(encode(*a, ctx), encode(*b, ctx));
      if (got == Verdict::Unknown) continue;
      ++decided;
      EXPECT_EQ(got == Verdict::True, oracle_subsumes(*a, *b, tbox).holds)
          << print(*a) << " under " << print(*b);
    }
  }
  EXPECT_GT(decided, 1000);
}

}  // namespace
}  // namespace bitsim
