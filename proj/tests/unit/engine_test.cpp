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

#include "bitsim/engine.hpp"
#include "bitsim/error.hpp"
#include "bitsim/generate.hpp"
#include "fixtures.hpp"

namespace bitsim {
namespace {

class Engine : public ::testing::Test {
 protected:
  EncodingContext ctx = build_context(testing::diamond());
  BitCode code(const char* n) const { return encode_atomic(n, ctx); }
};

TEST_F(Engine, ChunkedMatchesDirect) {
  ChunkCache cache;
  for (int chunk : {1, 2, 3, 64}) {
    SimilarityConfig cfg;
    cfg.chunk_size = chunk;
    EXPECT_EQ(*sim_chunked(code("B"), code("C"), cfg, &cache).score, *sigma_hat(code("B"), code("C")).score);
  }
}

TEST_F(Engine, RepeatedCallHitsCache) {
  ChunkCache cache;
  SimilarityConfig cfg;
  cfg.chunk_size = 2;
  const auto first = sim_chunked(code("B"), code("C"), cfg, &cache);
  const auto second = sim_chunked(code("B"), code("C"), cfg, &cache);
  EXPECT_EQ(first.score, second.score);
  EXPECT_EQ(first.cache_hits, 0);
  EXPECT_GT(second.cache_hits, 0);
  // The key is symmetric.
  EXPECT_EQ(sim_chunked(code("C"), code("B"), cfg, &cache).cache_hits, 2);
}

TEST(ChunkKey, IsOrderFree) {
  EXPECT_EQ(ChunkKey::make("01", "1X"), ChunkKey::make("1X", "01"));
  EXPECT_FALSE(ChunkKey::make("01", "1X") == ChunkKey::make("01", "10"));
}

TEST(ChunkCacheStats, Lifecycle) {
  ChunkCache cache;
  CacheStats st = cache.stats();
  EXPECT_EQ(st.entries, 0u);
  EXPECT_EQ(st.hits, 0u);
  EXPECT_EQ(st.misses, 0u);
  const EncodingContext ctx = build_context(testing::diamond());
  const std::vector<BitCode> codes(4, encode_atomic("D", ctx));
  SimilarityConfig cfg;
  cfg.chunk_size = 1;
  all_pairs(codes, cfg, &cache, 2);
  st = cache.stats();
  EXPECT_GT(st.hits, 0u);
  EXPECT_GT(st.entries, 0u);
  cache.clear();
  EXPECT_EQ(cache.stats().entries, 0u);
}

TEST(ChunkCacheStats, EvictionKeepsBound) {
  ChunkCache cache(8, 2);
  for (int i = 0; i < 100; ++i) cache.insert(ChunkKey::make(std::to_string(i), "0"), {});
  EXPECT_LE(cache.stats().entries, 8u);
}

TEST_F(Engine, DiamondMatrix) {
  const std::vector<BitCode> codes = {code("A"), code("B"), code("C"), code("D")};
  ChunkCache cache;
  const Matrix m = all_pairs(codes, {}, &cache);
  ASSERT_EQ(m.n, 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(*m.at(i, i), 1.0);
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(m.at(i, j), m.at(j, i));
  }
  EXPECT_EQ(*m.at(3, 1), 0.75);
  std::ostringstream out;
  write_matrix_tsv(out, m, {"A", "B", "C", "D"});
  EXPECT_EQ(out.str(),
            "\tA\tB\tC\tD\n"
            "A\t1.000000\t0.750000\t0.750000\t0.625000\n"
            "B\t0.750000\t1.000000\t0.666667\t0.750000\n"
            "C\t0.750000\t0.666667\t1.000000\t0.750000\n"
            "D\t0.625000\t0.750000\t0.750000\t1.000000\n");
}

TEST_F(Engine, SingleCodeAndUndefinedEntries) {
  const Matrix one = all_pairs({code("A")}, {}, nullptr);
  ASSERT_EQ(one.n, 1u);
  EXPECT_EQ(*one.at(0, 0), 1.0);
  const Matrix m = all_pairs({BitCode::top(4), code("A")}, {}, nullptr);
  EXPECT_FALSE(m.at(0, 1).has_value());
  std::ostringstream out;
  write_matrix_tsv(out, m, {"top", "A"});
  EXPECT_NE(out.str().find("NA"), std::string::npos);
}

TEST(EngineMixed, RejectsMixedWidths) {
  EXPECT_THROW(all_pairs({deserialize("01"), deserialize("011")}, {}, nullptr), ContextMismatch);
  EXPECT_THROW(sim_chunked(deserialize("01"), deserialize("011"), {}, nullptr), ContextMismatch);
}

TEST(EngineRandom, ChunkedIsBitIdentical) {
  Rng rng(3);
  DagShape shape;
  shape.atoms = 9;
  shape.roles = 2;
  const TBox tbox = random_dag_tbox(rng, shape);
  const EncodingContext ctx = build_context(tbox);
  ChunkCache cache(64);
  for (int t = 0; t < 200; ++t) {
    const BitCode a = encode(*random_expr(rng, tbox, 3, ExprFlavor::WithRoles), ctx);
    const BitCode b = encode(*random_expr(rng, tbox, 3, ExprFlavor::WithRoles), ctx);
    const auto want = sigma_hat(a, b).score;
    for (int chunk : {1, 2, 3, 8, 64}) {
      SimilarityConfig cfg;
      cfg.chunk_size = chunk;
      const auto got = sim_chunked(a, b, cfg, &cache).score;
      ASSERT_EQ(got.has_value(), want.has_value());
      if (want) EXPECT_EQ(*got, *want);
    }
  }
}

TEST(EngineRandom, ThreadCountDoesNotChangeResults) {
  Rng rng(4);
  std::vector<BitCode> codes;
  for (int i = 0; i < 40; ++i) codes.push_back(random_code(rng, 24, 1));
  const Matrix one = all_pairs(codes, {}, nullptr, 1);
  ChunkCache cache;
  const Matrix many = all_pairs(codes, {}, &cache, 8);
  EXPECT_EQ(one.values, many.values);
}

}  // namespace
}  // namespace bitsim
