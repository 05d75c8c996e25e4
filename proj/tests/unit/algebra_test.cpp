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

#include <set>

#include "bitsim/bit_algebra.hpp"
#include "fixtures.hpp"

namespace bitsim {
namespace {

Bit b(char c) { return *bit_from_char(c); }

TEST(BitAlgebra, CharactersAreABijection) {
  std::set<char> seen;
  for (Bit x : kAllBits) {
    seen.insert(to_char(x));
    EXPECT_EQ(bit_from_char(to_char(x)), x);
  }
  EXPECT_EQ(seen.size(), 11u);
  EXPECT_FALSE(bit_from_char('q').has_value());
}

TEST(BitAlgebra, NegationExamples) {
  EXPECT_EQ(neg(Bit::Zero), Bit::Zero);
  EXPECT_EQ(neg(Bit::One), Bit::XDoublePrime);
  EXPECT_EQ(neg(neg(Bit::X)), Bit::X);
  EXPECT_EQ(neg(Bit::X), Bit::Y);
  EXPECT_EQ(neg(Bit::TopPrime), Bit::BotPrime);
  EXPECT_EQ(neg(Bit::Top), Bit::Bot);
}

TEST(BitAlgebra, GeneratorIdentities) {
  EXPECT_EQ(join(Bit::One, Bit::Zero), Bit::X);
  EXPECT_EQ(join(Bit::XDoublePrime, Bit::Zero), Bit::XPrime);
  EXPECT_EQ(join(Bit::Y, Bit::YPrime), Bit::TopPrime);
  EXPECT_EQ(meet(Bit::One, Bit::Zero), Bit::YPrime);
  EXPECT_EQ(meet(Bit::XDoublePrime, Bit::Zero), Bit::Y);
  EXPECT_EQ(meet(Bit::X, Bit::XPrime), Bit::BotPrime);
  EXPECT_EQ(join(Bit::X, Bit::X), Bit::X);
  EXPECT_EQ(join(Bit::One, Bit::XDoublePrime), Bit::TopPrime);
}

TEST(BitAlgebra, ComplementMeetOfInnerSymbolsIsNotBottom) {
  EXPECT_EQ(meet(Bit::One, neg(Bit::One)), Bit::BotPrime);
  for (Bit x : kAllBits) {
    if (x == Bit::Top || x == Bit::Bot) continue;
    EXPECT_NE(meet(x, neg(x)), Bit::Bot) << to_char(x);
  }
}

TEST(BitAlgebra, ComplementMeetOfExtremesIsBottom) {
  // Bottom absorbs meet, so the extremes cannot satisfy the complement rule.
  EXPECT_EQ(meet(Bit::Top, neg(Bit::Top)), Bit::Bot);
  EXPECT_EQ(meet(Bit::Bot, neg(Bit::Bot)), Bit::Bot);
}

TEST(BitAlgebra, OrderExamples) {
  EXPECT_TRUE(leq(Bit::One, Bit::Zero));
  EXPECT_FALSE(leq(Bit::Zero, Bit::One));
  for (Bit x : kAllBits) {
    EXPECT_TRUE(leq(x, x));
    EXPECT_TRUE(leq(Bit::Bot, x));
    EXPECT_TRUE(leq(x, Bit::Top));
  }
}

TEST(BitAlgebra, OrderIsClosureOfHandDiagram) {
  std::map<char, std::set<char>> up;
  for (Bit x : kAllBits) up[to_char(x)].insert(to_char(x));
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto [lo, hi] : testing::hand_hasse()) {
      for (auto& [k, s] : up) {
        if (s.count(lo) && s.insert(hi).second) grew = true;
      }
    }
  }
  for (Bit x : kAllBits) {
    for (Bit y : kAllBits) {
      EXPECT_EQ(leq(x, y), up[to_char(x)].count(to_char(y)) == 1)
          << to_char(x) << " " << to_char(y);
    }
  }
}

TEST(BitAlgebra, DistancesMatchHandDiagram) {
  for (Bit x : kAllBits) {
    for (Bit y : kAllBits) {
      EXPECT_EQ(hasse_distance(x, y), testing::hand_distance(to_char(x), to_char(y)));
    }
  }
  EXPECT_EQ(hasse_distance(b('1'), b('0')), 1);
  EXPECT_EQ(hasse_distance(b('1'), b('X')), 2);
  EXPECT_EQ(hasse_distance(b('y'), b('X')), 3);
}

TEST(BitAlgebra, JoinIsUpperBoundAndMeetIsDual) {
  for (Bit x : kAllBits) {
    for (Bit y : kAllBits) {
      EXPECT_TRUE(leq(x, join(x, y)));
      EXPECT_TRUE(leq(meet(x, y), x));
      EXPECT_EQ(meet(x, y), neg(join(neg(x), neg(y))));
    }
  }
}

TEST(VerifyTables, CanonicalTablesFailOnlyTheComplementRule) {
  const ConstraintReport r = verify_tables(tables());
  ASSERT_EQ(r.failed_names(), std::vector<std::string>{"complement meet is never bottom"});
  EXPECT_FALSE(r.all_passed());
}

TEST(VerifyTables, DetectsBrokenGenerator) {
  AlgebraTables t = tables();
  t.join[index_of(Bit::One)][index_of(Bit::Zero)] = Bit::One;
  t.join[index_of(Bit::Zero)][index_of(Bit::One)] = Bit::One;
  const auto failed = verify_tables(t).failed_names();
  EXPECT_NE(std::find(failed.begin(), failed.end(), "generator X = 1 join 0"), failed.end());
}

TEST(VerifyTables, DetectsNegationMovingThePotentialBit) {
  AlgebraTables t = tables();
  t.neg[index_of(Bit::Zero)] = Bit::One;
  const auto failed = verify_tables(t).failed_names();
  EXPECT_NE(std::find(failed.begin(), failed.end(), "potential bit fixed by negation"),
            failed.end());
}

TEST(RoleAlphabet, ClosedUnderJoinAndMeet) {
  EXPECT_EQ(join(RoleBit::Zero, RoleBit::One), RoleBit::X);
  EXPECT_EQ(meet(RoleBit::One, RoleBit::Zero), RoleBit::YPrime);
  EXPECT_EQ(negate(Quantifier::Forall), Quantifier::Exists);
}

}  // namespace
}  // namespace bitsim
