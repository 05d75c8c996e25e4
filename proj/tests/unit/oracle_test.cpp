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
#include "bitsim/oracle.hpp"
#include "fixtures.hpp"

namespace bitsim {
namespace {

// Sign assignments over {A, B, C, D} that respect the diamond inclusions.
std::vector<std::map<char, bool>> diamond_models() {
  std::vector<std::map<char, bool>> out;
  for (int m = 0; m < 16; ++m) {
    std::map<char, bool> s{{'A', m & 1}, {'B', m & 2}, {'C', m & 4}, {'D', m & 8}};
    if ((s['B'] && !s['A']) || (s['C'] && !s['A']) || (s['D'] && !(s['B'] && s['C']))) continue;
    out.push_back(s);
  }
  return out;
}

TEST(Extension, Basics) {
  const TBox tbox = parse_tbox("concept A\nrole r\n");
  Interpretation i;
  i.domain_size = 2;
  i.concept_ext["A"] = 0b10;
  i.role_ext["r"] = std::uint64_t{1} << (0 * 2 + 1);
  EXPECT_EQ(extension(*top(), i, tbox), 0b11u);
  EXPECT_EQ(extension(*parse_expr("and(A, not(A))"), i, tbox), 0u);
  EXPECT_EQ(extension(*parse_expr("some(r, A)"), i, tbox), 0b01u);
  EXPECT_EQ(extension(*parse_expr("all(r, A)"), i, tbox), 0b11u);
  EXPECT_EQ(extension(*parse_expr("all(r, not(A))"), i, tbox), 0b10u);
}

TEST(OracleSubsumes, Diamond) {
  const TBox tbox = testing::diamond();
  EXPECT_TRUE(oracle_subsumes(*atom("D"), *atom("B"), tbox).holds);
  EXPECT_TRUE(oracle_subsumes(*parse_expr("and(A, B)"), *atom("A"), tbox).holds);
  const OracleResult r = oracle_subsumes(*atom("B"), *atom("C"), tbox);
  ASSERT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  // The witness reproduces the violation.
  const std::uint32_t b = extension(*atom("B"), *r.witness, tbox);
  const std::uint32_t c = extension(*atom("C"), *r.witness, tbox);
  EXPECT_NE(b & ~c, 0u);
}

TEST(OracleSubsumes, RoleMode) {
  const TBox tbox = parse_tbox("concept A\nB sub A\nrole r\nrole s sub r\n");
  EXPECT_TRUE(oracle_subsumes(*parse_expr("some(s, B)"), *parse_expr("some(r, A)"), tbox).holds);
  const OracleResult r = oracle_subsumes(*parse_expr("some(r, A)"), *parse_expr("some(s, A)"), tbox);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.mode, OracleResult::Mode::Role);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(extension(*parse_expr("some(r, A)"), *r.witness, tbox) &
                ~extension(*parse_expr("some(s, A)"), *r.witness, tbox),
            0u);
}

TEST(OracleSubsumes, CapsAreEnforced) {
  const TBox tbox = parse_tbox(
      "concept A\nconcept B\nconcept C\nrole r\nrole s\nrole t\n");
  EXPECT_THROW(oracle_subsumes(*parse_expr("and(some(r, A), some(s, B))"),
                               *parse_expr("some(t, C)"), tbox),
               CapExceeded);
}

TEST(OracleJaccard, Diamond) {
  const TBox tbox = testing::diamond();
  int both = 0, either = 0;
  for (auto& s : diamond_models()) {
    both += s['B'] && s['C'];
    either += s['B'] || s['C'];
  }
  const Rational r = oracle_jaccard(*atom("B"), *atom("C"), tbox);
  EXPECT_DOUBLE_EQ(r.value(), static_cast<double>(both) / either);
  EXPECT_EQ(oracle_jaccard(*atom("B"), *atom("B"), tbox).value(), 1.0);
  EXPECT_EQ(oracle_jaccard(*atom("A"), *not_(atom("A")), tbox).num, 0u);
}

TEST(OracleFcg, CountsAssignments) {
  EXPECT_EQ(oracle_fcg(deserialize("(U:101|011)")), 3u);
  EXPECT_EQ(oracle_fcg(deserialize("0X")), 4u);
  EXPECT_EQ(oracle_fcg(deserialize("1N")), 1u);
}

TEST(CommonAncestors, Diamond) {
  const EncodingContext ctx = build_context(testing::diamond());
  EXPECT_EQ(serialize(common_ancestor_code("B", "C", ctx)), "0001");
  EXPECT_EQ(serialize(common_ancestor_code("D", "B", ctx)), "0011");
}

TEST(CrossCheck, DiamondHasNoDisagreements) {
  const CrossCheckReport r = cross_check(testing::diamond(), 500, 42);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.subsumption_pairs, 500);
  EXPECT_EQ(r.agreements + r.unknowns + r.documented + r.inconclusive, r.subsumption_pairs);
  EXPECT_GT(r.agreements, 0);
  EXPECT_EQ(r.lcs_disagreements, 0);
}

TEST(CrossCheck, EmptyExistentialIsDocumented) {
  const TBox tbox = parse_tbox("concept A\nB sub A\nrole r\n");
  const CrossCheckReport r = cross_check(tbox, 100, 1);
  EXPECT_TRUE(r.ok());
  EXPECT_GT(r.documented, 0);
  bool listed = false;
  for (const auto& row : r.rows) listed = listed || row.kind == "documented-incompleteness";
  EXPECT_TRUE(listed);
}

TEST(CrossCheck, IsDeterministic) {
  std::ostringstream a, b;
  cross_check(testing::diamond(), 200, 9).write_tsv(a);
  cross_check(testing::diamond(), 200, 9).write_tsv(b);
  EXPECT_EQ(a.str(), b.str());
}

}  // namespace
}  // namespace bitsim
