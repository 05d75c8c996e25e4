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

#include "bitsim/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <functional>
#include <thread>

#include "bitsim/error.hpp"

namespace bitsim {

ChunkKey ChunkKey::make(std::string_view a, std::string_view b) {
  if (b < a) std::swap(a, b);
  const std::hash<std::string_view> h;
  return {h(a), h(b), std::string(a), std::string(b)};
}

ChunkCache::ChunkCache(std::size_t capacity, std::size_t shards) {
  shards = std::max<std::size_t>(shards, 1);
  per_shard_capacity_ = std::max<std::size_t>(capacity / shards, 1);
  for (std::size_t i = 0; i < shards; ++i) shards_.push_back(std::make_unique<Shard>());
}

ChunkCache::Shard& ChunkCache::shard_for(const ChunkKey& key) {
  return *shards_[ChunkKeyHash{}(key) % shards_.size()];
}

std::optional<PartialSum> ChunkCache::find(const ChunkKey& key) {
  Shard& s = shard_for(key);
  std::lock_guard lock(s.mutex);
  auto it = s.index.find(key);
  if (it == s.index.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  s.order.splice(s.order.begin(), s.order, it->second);
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second->second;
}

void ChunkCache::insert(const ChunkKey& key, const PartialSum& value) {
  Shard& s = shard_for(key);
  std::lock_guard lock(s.mutex);
  if (auto it = s.index.find(key); it != s.index.end()) {
    it->second->second = value;
    s.order.splice(s.order.begin(), s.order, it->second);
    return;
  }
  s.order.emplace_front(key, value);
  s.index.emplace(key, s.order.begin());
  while (s.order.size() > per_shard_capacity_) {
    s.index.erase(s.order.back().first);
    s.order.pop_back();
  }
}

CacheStats ChunkCache::stats() const {
  CacheStats st;
  for (const auto& s : shards_) {
    std::lock_guard lock(s->mutex);
    st.entries += s->order.size();
  }
  st.hits = hits_.load();
  st.misses = misses_.load();
  return st;
}

void ChunkCache::clear() {
  for (auto& s : shards_) {
    std::lock_guard lock(s->mutex);
    s->order.clear();
    s->index.clear();
  }
  hits_ = 0;
  misses_ = 0;
}

namespace {

struct Prepared {
  const BitCode* code = nullptr;
  bool extreme = false;
  BitCode projected;
  std::string chars;
  std::optional<std::uint64_t> fcg;
};

Prepared prepare(const BitCode& code, const SimilarityConfig& cfg) {
  Prepared p;
  p.code = &code;
  p.extreme = code.is_top() || code.is_bottom();
  if (p.extreme) return p;
  p.projected = project(code);
  p.chars.reserve(p.projected.bits.size());
  for (Bit b : p.projected.bits) p.chars.push_back(to_char(b));
  if (cfg.generativity_penalty) p.fcg = fcg(code, cfg.fcg_cap);
  return p;
}

PartialSum chunked_total(const Prepared& a, const Prepared& b, const SimilarityConfig& cfg,
                         ChunkCache* cache, std::int64_t& hits) {
  const std::size_t width = a.projected.bits.size();
  const std::size_t step = static_cast<std::size_t>(std::max(cfg.chunk_size, 1));
  PartialSum total;
  for (std::size_t begin = 0; begin < width; begin += step) {
    const std::size_t end = std::min(begin + step, width);
    if (!cache) {
      total.merge(plain_partial(a.projected.bits, b.projected.bits, begin, end));
      continue;
    }
    const std::string_view sa = std::string_view(a.chars).substr(begin, end - begin);
    const std::string_view sb = std::string_view(b.chars).substr(begin, end - begin);
    const ChunkKey key = ChunkKey::make(sa, sb);
    if (auto hit = cache->find(key)) {
      ++hits;
      total.merge(*hit);
    } else {
      const PartialSum p = plain_partial(a.projected.bits, b.projected.bits, begin, end);
      cache->insert(key, p);
      total.merge(p);
    }
  }
  total.merge(segment_partial(a.projected, b.projected, cfg));
  return total;
}

std::optional<double> score_prepared(const Prepared& a, const Prepared& b,
                                     const SimilarityConfig& cfg, ChunkCache* cache) {
  if (a.extreme || b.extreme) {
    if (*a.code == *b.code) return 1.0;
    return std::nullopt;
  }
  std::int64_t hits = 0;
  const PartialSum total = chunked_total(a, b, cfg, cache, hits);
  std::optional<std::pair<std::uint64_t, std::uint64_t>> fcg_pair;
  if (cfg.generativity_penalty) fcg_pair = {*a.fcg, *b.fcg};
  return aggregate(total, fcg_pair);
}

}  // namespace

SimilarityReport sim_chunked(const BitCode& a, const BitCode& b, const SimilarityConfig& cfg,
                             ChunkCache* cache) {
  if (a.width() != b.width()) {
    throw ContextMismatch("codes of width " + std::to_string(a.width()) + " and " +
                          std::to_string(b.width()) + " come from different contexts");
  }
  if (a.is_top() || a.is_bottom() || b.is_top() || b.is_bottom()) return sigma_hat(a, b, cfg);
  SimilarityConfig plain_cfg = cfg;
  plain_cfg.generativity_penalty = false;
  const Prepared pa = prepare(a, plain_cfg);
  const Prepared pb = prepare(b, plain_cfg);
  std::int64_t hits = 0;
  const PartialSum total = chunked_total(pa, pb, cfg, cache, hits);
  SimilarityReport r = finish(a, b, total, cfg);
  r.cache_hits = hits;
  return r;
}

Matrix all_pairs(const std::vector<BitCode>& codes, const SimilarityConfig& cfg, ChunkCache* cache,
                 unsigned threads) {
  Matrix m;
  m.n = codes.size();
  m.values.assign(m.n * m.n, std::nullopt);
  if (m.n == 0) return m;
  for (const auto& c : codes) {
    if (c.width() != codes.front().width()) {
      throw ContextMismatch("codes of width " + std::to_string(codes.front().width()) + " and " +
                            std::to_string(c.width()) + " come from different contexts");
    }
  }
  std::vector<Prepared> prepared;
  prepared.reserve(m.n);
  for (const auto& c : codes) prepared.push_back(prepare(c, cfg));

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, m.n));

  std::atomic<std::size_t> next_row{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next_row.fetch_add(1); i < m.n; i = next_row.fetch_add(1)) {
        for (std::size_t j = i; j < m.n; ++j) {
          m.values[i * m.n + j] = score_prepared(prepared[i], prepared[j], cfg, cache);
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < i; ++j) m.values[i * m.n + j] = m.values[j * m.n + i];
  }
  return m;
}

void write_matrix_tsv(std::ostream& out, const Matrix& m, const std::vector<std::string>& names) {
  for (const auto& name : names) out << '\t' << name;
  out << '\n';
  char buf[32];
  for (std::size_t i = 0; i < m.n; ++i) {
    out << (i < names.size() ? names[i] : std::to_string(i + 1));
    for (std::size_t j = 0; j < m.n; ++j) {
      const auto v = m.at(i, j);
      if (v) {
        std::snprintf(buf, sizeof buf, "%.6f", *v);
        out << '\t' << buf;
      } else {
        out << "\tNA";
      }
    }
    out << '\n';
  }
}

}  // namespace bitsim
