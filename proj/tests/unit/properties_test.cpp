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

#include <sstream>

#include "bitsim/generate.hpp"
#include "bitsim/properties.hpp"
#include "fixtures.hpp"

namespace bitsim {
namespace {

TEST(Properties, DiamondHasNoViolations) {
  const PropertyReport r = check_properties(testing::diamond(), {}, 42, 1000);
  std::ostringstream tsv;
  r.write_tsv(tsv);
  EXPECT_TRUE(r.ok()) << tsv.str();
  ASSERT_NE(r.find("reflexivity"), nullptr);
  EXPECT_EQ(r.find("reflexivity")->trials, 1000);
  EXPECT_GT(r.find("subsumption-preservation")->trials, 0);
  EXPECT_EQ(r.find("no-such-property"), nullptr);
}

TEST(Properties, RolesAndDefinitions) {
  const TBox tbox = parse_tbox(
      "concept A\nB sub A\nC sub A\nrole r\nrole s sub r\n"
      "define P = some(r, B)\ndefine Q = and(C, all(s, A))\n");
  const PropertyReport r = check_properties(tbox, {}, 7, 300);
  std::ostringstream tsv;
  r.write_tsv(tsv);
  EXPECT_TRUE(r.ok()) << tsv.str();
}

TEST(Properties, StrictMonotonicityScenarioIsExercised) {
  Rng rng(2);
  const StrictScenario s = strict_monotonicity_scenario(rng);
  const PropertyReport r = check_properties(s.tbox, {}, 3, 100);
  EXPECT_GT(r.find("strict-monotonicity")->trials, 0);
  EXPECT_EQ(r.find("strict-monotonicity")->violations, 0);
}

TEST(ConjunctChain, FlatHierarchy) {
  const EncodingContext ctx = build_context(flat_tbox(18));
  std::vector<std::string> shared;
  for (int i = 1; i <= 16; ++i) shared.push_back("C" + std::to_string(i));
  const auto series = conjunct_chain_series(ctx, *atom("C17"), *atom("C18"), shared, {});
  ASSERT_EQ(series.size(), 16u);
  for (std::size_t n = 1; n < series.size(); ++n) EXPECT_GE(*series[n], *series[n - 1]);
  // Shared positions score one against themselves; the two private bits
  // disagree with the potential bit and each other.
  for (std::size_t n = 0; n < series.size(); ++n) {
    const double k = static_cast<double>(n + 1);
    EXPECT_DOUBLE_EQ(*series[n], (k + 0.5) / (k + 2));
  }
  EXPECT_GE(*series.back(), 0.9);
}

TEST(Properties, Deterministic) {
  std::ostringstream a, b;
  check_properties(testing::vee(), {}, 5, 200).write_tsv(a);
  check_properties(testing::vee(), {}, 5, 200).write_tsv(b);
  EXPECT_EQ(a.str(), b.str());
}

}  // namespace
}  // namespace bitsim
