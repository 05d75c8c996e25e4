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

#include <benchmark/benchmark.h>

#include "bitsim/engine.hpp"
#include "bitsim/generate.hpp"

namespace {

using namespace bitsim;

struct Corpus {
  TBox tbox;
  EncodingContext ctx;
  std::vector<BitCode> codes;
};

Corpus make_corpus(int atoms, int count, std::uint64_t seed) {
  Rng rng(seed);
  DagShape shape;
  shape.atoms = atoms;
  shape.edge_probability = 4.0 / atoms;
  shape.max_parents = 3;
  Corpus c{random_dag_tbox(rng, shape), {}, {}};
  c.ctx = build_context(c.tbox);
  for (int i = 0; i < count; ++i) c.codes.push_back(encode_atomic(rng.pick(c.tbox.concepts), c.ctx));
  return c;
}

void BM_Encode(benchmark::State& state) {
  Rng rng(1);
  DagShape shape;
  shape.atoms = static_cast<int>(state.range(0));
  shape.roles = 3;
  const TBox tbox = random_dag_tbox(rng, shape);
  const EncodingContext ctx = build_context(tbox);
  std::vector<ConceptPtr> exprs;
  for (int i = 0; i < 64; ++i) exprs.push_back(random_expr(rng, tbox, 3, ExprFlavor::WithRoles));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(encode(*exprs[i++ % exprs.size()], ctx));
}
BENCHMARK(BM_Encode)->Arg(16)->Arg(64)->Arg(256);

void BM_SigmaHat(benchmark::State& state) {
  const Corpus c = make_corpus(static_cast<int>(state.range(0)), 64, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sigma_hat(c.codes[i % 64], c.codes[(i * 7 + 3) % 64]));
    ++i;
  }
}
BENCHMARK(BM_SigmaHat)->Arg(64)->Arg(256)->Arg(1024);

void BM_SimChunked(benchmark::State& state) {
  const Corpus c = make_corpus(256, 64, 3);
  SimilarityConfig cfg;
  cfg.chunk_size = static_cast<int>(state.range(0));
  ChunkCache cache;
  ChunkCache* use = state.range(1) ? &cache : nullptr;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sim_chunked(c.codes[i % 64], c.codes[(i * 7 + 3) % 64], cfg, use));
    ++i;
  }
  const CacheStats st = cache.stats();
  if (st.hits + st.misses > 0) {
    state.counters["hit_rate"] =
        static_cast<double>(st.hits) / static_cast<double>(st.hits + st.misses);
  }
}
BENCHMARK(BM_SimChunked)->ArgsProduct({{1, 8, 64, 256}, {0, 1}});

void BM_AllPairs(benchmark::State& state) {
  const Corpus c = make_corpus(256, static_cast<int>(state.range(0)), 4);
  for (auto _ : state) {
    ChunkCache cache;
    benchmark::DoNotOptimize(all_pairs(c.codes, {}, &cache));
  }
  const auto n = static_cast<double>(state.range(0));
  state.counters["pairs"] = n * (n + 1) / 2;
}
BENCHMARK(BM_AllPairs)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
