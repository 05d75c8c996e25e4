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

#pragma once

#include <atomic>
#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bitsim/similarity.hpp"

namespace bitsim {

/// Cache key for a pair of equal-length chunk slices. The smaller slice is
/// stored first so that (a, b) and (b, a) are the same key.
struct ChunkKey {
  std::uint64_t hash_a = 0;
  std::uint64_t hash_b = 0;
  std::string slice_a;
  std::string slice_b;

  static ChunkKey make(std::string_view a, std::string_view b);
  bool operator==(const ChunkKey& other) const {
    return hash_a == other.hash_a && hash_b == other.hash_b && slice_a == other.slice_a &&
           slice_b == other.slice_b;
  }
};

struct ChunkKeyHash {
  std::size_t operator()(const ChunkKey& k) const {
    return static_cast<std::size_t>(k.hash_a * 0x9E3779B97F4A7C15ULL ^ k.hash_b);
  }
};

struct CacheStats {
  std::size_t entries = 0;
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
};

/// Bounded LRU cache of chunk-pair partial sums, sharded by key hash.
/// Safe for concurrent lookup and insert.
class ChunkCache {
 public:
  explicit ChunkCache(std::size_t capacity = std::size_t{1} << 16, std::size_t shards = 16);

  std::optional<PartialSum> find(const ChunkKey& key);
  void insert(const ChunkKey& key, const PartialSum& value);
  CacheStats stats() const;
  void clear();

 private:
  struct Shard {
    std::mutex mutex;
    std::list<std::pair<ChunkKey, PartialSum>> order;  // front is most recent
    std::unordered_map<ChunkKey, std::list<std::pair<ChunkKey, PartialSum>>::iterator,
                       ChunkKeyHash>
        index;
  };
  Shard& shard_for(const ChunkKey& key);

  std::size_t per_shard_capacity_;
  std::vector<std::unique_ptr<Shard>> shards_;
  std::atomic<std::uint64_t> hits_{0};
  std::atomic<std::uint64_t> misses_{0};
};

/// sigma_hat evaluated chunk by chunk over the projected plain bits; the
/// result is identical to sigma_hat. A null cache disables caching.
SimilarityReport sim_chunked(const BitCode& a, const BitCode& b, const SimilarityConfig& cfg,
                             ChunkCache* cache);

struct Matrix {
  std::size_t n = 0;
  std::vector<std::optional<double>> values;  // row-major, nullopt is undefined

  std::optional<double> at(std::size_t i, std::size_t j) const { return values[i * n + j]; }
};

/// All pairwise scores, upper triangle in parallel. threads == 0 picks the
/// hardware concurrency.
Matrix all_pairs(const std::vector<BitCode>& codes, const SimilarityConfig& cfg, ChunkCache* cache,
                 unsigned threads = 0);

/// TSV with a header row and column of names and six decimals; undefined
/// entries print as NA.
void write_matrix_tsv(std::ostream& out, const Matrix& m, const std::vector<std::string>& names);

}  // namespace bitsim
