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

#include "bitsim/error.hpp"
#include "bitsim/generate.hpp"
#include "bitsim/oracle.hpp"
#include "bitsim/similarity.hpp"
#include "fixtures.hpp"

namespace bitsim {
namespace {

class Diamond : public ::testing::Test {
 protected:
  EncodingContext ctx = build_context(testing::diamond());
  BitCode code(const char* e) const { return encode(*parse_expr(e), ctx); }
  double sim(const char* a, const char* b) const { return *sigma_hat(code(a), code(b)).score; }
};

TEST(SigmaBit, Examples) {
  EXPECT_EQ(sigma_bit(Bit::Zero, Bit::Zero).kind, BitScore::Kind::Ignored);
  EXPECT_EQ(sigma_bit(Bit::Top, Bit::One).kind, BitScore::Kind::Undefined);
  EXPECT_EQ(sigma_bit(Bit::Top, Bit::Top).value, 1.0);
  EXPECT_EQ(sigma_bit(Bit::One, Bit::Zero).value, 0.5);
  EXPECT_EQ(sigma_bit(Bit::One, Bit::X).value, 0.25);
}

TEST(SigmaBit, MatchesHandDiagram) {
  for (Bit a : kAllBits) {
    for (Bit b : kAllBits) {
      if (a == Bit::Top || a == Bit::Bot || b == Bit::Top || b == Bit::Bot) continue;
      if (a == Bit::Zero && b == Bit::Zero) continue;
      EXPECT_EQ(sigma_bit(a, b).value,
                1.0 / (1 << testing::hand_distance(to_char(a), to_char(b))));
    }
  }
}

TEST_F(Diamond, SiblingsAndChains) {
  EXPECT_EQ(sim("B", "B"), 1.0);
  EXPECT_DOUBLE_EQ(sim("B", "C"), testing::hand_similarity("0011", "0101"));
  EXPECT_DOUBLE_EQ(sim("B", "C"), 2.0 / 3.0);
  EXPECT_EQ(sim("D", "B"), 0.75);
  EXPECT_EQ(sim("D", "A"), 0.625);
  EXPECT_GE(sim("D", "B"), sim("D", "A"));
}

TEST_F(Diamond, Jaccard) {
  EXPECT_EQ(*bitsim_jaccard(*atom("B"), *atom("B"), ctx).score, 1.0);
  const double want = testing::hand_similarity("0yy1", "0XX1");
  EXPECT_DOUBLE_EQ(*bitsim_jaccard(*atom("B"), *atom("C"), ctx).score, want);
  EXPECT_DOUBLE_EQ(want, 5.0 / 12.0);
}

TEST(Jaccard, ContradictionIsUndefined) {
  const EncodingContext ctx = build_context(parse_tbox("concept A\n"));
  EXPECT_FALSE(bitsim_jaccard(*atom("A"), *not_(atom("A")), ctx).defined());
}

TEST_F(Diamond, ExtremesAreDecidedAtCodeLevel) {
  EXPECT_EQ(*sigma_hat(code("top"), code("top")).score, 1.0);
  const auto r = sigma_hat(code("top"), code("B"));
  EXPECT_TRUE(r.code_level);
  EXPECT_FALSE(r.defined());
}

TEST_F(Diamond, BreakdownListsEveryPosition) {
  const auto r = sigma_hat(code("B"), code("C"));
  ASSERT_EQ(r.per_position.size(), 4u);
  EXPECT_EQ(r.per_position[3].score.kind, BitScore::Kind::Ignored);
  EXPECT_EQ(r.total.ignored_count, 1);
  EXPECT_EQ(r.total.weight_sum, 3.0);
}

TEST(Segments, FillersAreComparedByKey) {
  const EncodingContext ctx =
      build_context(parse_tbox("concept A\nB sub A\nC sub A\nrole r\nrole s\n"));
  auto code = [&](const char* e) { return encode(*parse_expr(e), ctx); };
  // Same key: the segment scores the filler similarity.
  const double bc = testing::hand_similarity("011", "101");
  EXPECT_DOUBLE_EQ(*sigma_hat(code("some(r, B)"), code("some(r, C)")).score, bc);
  // Different quantifier: unmatched segments weigh one and score zero.
  EXPECT_EQ(*sigma_hat(code("some(r, B)"), code("all(r, B)")).score, 0.0);
  // Mixed plain bits and a matched segment with equal fillers.
  const BitCode x = code("and(B, some(r, A))");
  const BitCode y = code("and(A, some(r, A))");
  auto bits_of = [](const BitCode& c) {
    std::string s;
    for (Bit b : project(c).bits) s.push_back(to_char(b));
    return s;
  };
  const std::string px = bits_of(x), py = bits_of(y);
  int weight = 0;
  for (std::size_t i = 0; i < px.size(); ++i) weight += px[i] != '0' || py[i] != '0';
  const double plain = testing::hand_similarity(px, py) * weight;
  EXPECT_DOUBLE_EQ(*sigma_hat(x, y).score, (plain + 1.0) / (weight + 1));
}

TEST(Penalty, ScalesByGenerativityRatio) {
  const EncodingContext ctx = build_context(testing::vee());
  SimilarityConfig cfg;
  cfg.generativity_penalty = true;
  const BitCode a = encode(*parse_expr("or(B, C)"), ctx);
  const BitCode b = encode(*parse_expr("A"), ctx);
  const auto plain = *sigma_hat(a, b).score;
  const auto penalized = sigma_hat(a, b, cfg);
  ASSERT_TRUE(penalized.fcg_pair.has_value());
  const double fa = static_cast<double>(oracle_fcg(a));
  const double fb = static_cast<double>(oracle_fcg(b));
  EXPECT_DOUBLE_EQ(*penalized.score, plain * std::min(fa, fb) / std::max(fa, fb));
}

TEST(Fcg, Examples) {
  EXPECT_EQ(fcg(deserialize("(U:101|011)")), 3u);
  EXPECT_EQ(fcg(deserialize("1")), 1u);
  EXPECT_EQ(fcg(deserialize("11")), 1u);
  EXPECT_EQ(fcg(deserialize("0X")), 4u);
  EXPECT_EQ(fcg(deserialize("ff")), 0u);
  EXPECT_THROW(fcg(deserialize("0[E|1|1]")), UnsupportedFragment);
  EXPECT_THROW(fcg(BitCode::plain(std::vector<Bit>(21, Bit::One))), CapExceeded);
}

TEST(Fcg, AgreesWithEnumeration) {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    const BitCode c = random_code(rng, rng.range(1, 10), rng.range(0, 3));
    EXPECT_EQ(fcg(c), oracle_fcg(c)) << serialize(c);
  }
}

TEST_F(Diamond, LeastCommonSubsumer) {
  EXPECT_EQ(serialize(lcs_atomic("B", "C", ctx)), "0001");
  EXPECT_EQ(lcs_atomic("A", "A", ctx), code("A"));
  EXPECT_EQ(serialize(lcs_atomic("B", "D", ctx)), "0011");
  EXPECT_EQ(atomic_name_of(lcs_atomic("B", "C", ctx), ctx), "A");
  EXPECT_THROW(lcs_atomic("B", "Q", ctx), UndeclaredName);
}

TEST(LeastCommonSubsumer, DefinedNamesAreRejected) {
  const EncodingContext ctx = build_context(parse_tbox("concept A\ndefine P = not(A)\n"));
  EXPECT_THROW(lcs_atomic("A", "P", ctx), UnsupportedFragment);
}

TEST(Width, MixedContextsAreRejected) {
  EXPECT_THROW(sigma_hat(deserialize("01"), deserialize("011")), ContextMismatch);
}

}  // namespace
}  // namespace bitsim
