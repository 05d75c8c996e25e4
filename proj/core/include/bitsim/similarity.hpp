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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitsim/encoder.hpp"

namespace bitsim {

struct BitScore {
  enum class Kind { Score, Ignored, Undefined };
  Kind kind = Kind::Score;
  double value = 0.0;

  static BitScore score(double v) { return {Kind::Score, v}; }
  static BitScore ignored() { return {Kind::Ignored, 0.0}; }
  static BitScore undefined() { return {Kind::Undefined, 0.0}; }
};

/// Similarity of two bits: (0,0) is ignored, T and F only match themselves,
/// otherwise 2^-d for the Hasse distance d.
BitScore sigma_bit(Bit a, Bit b);

struct SimilarityConfig {
  bool generativity_penalty = false;
  int chunk_size = 64;
  int fcg_cap = 20;
  static constexpr bool ignore_zero_pairs = true;
};

/// Running aggregate over a run of positions. Merging is associative and
/// exact for the dyadic bit scores.
struct PartialSum {
  double score_sum = 0.0;
  double weight_sum = 0.0;
  std::int64_t ignored_count = 0;
  bool undefined_flag = false;

  void merge(const PartialSum& other) {
    score_sum += other.score_sum;
    weight_sum += other.weight_sum;
    ignored_count += other.ignored_count;
    undefined_flag = undefined_flag || other.undefined_flag;
  }
};

struct PositionEntry {
  int position = 0;
  Bit a = Bit::Zero;
  Bit b = Bit::Zero;
  double weight = 1.0;
  BitScore score;
};

struct SegmentEntry {
  std::string key;  // quantifier and role code
  bool matched = false;
  std::optional<double> score;  // nullopt when the filler similarity is undefined
};

struct SimilarityReport {
  std::optional<double> score;  // nullopt means undefined
  bool code_level = false;      // decided by the top/bottom code rule
  std::vector<PositionEntry> per_position;
  std::vector<SegmentEntry> segments;
  PartialSum total;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> fcg_pair;
  std::int64_t cache_hits = 0;

  bool defined() const { return score.has_value(); }
};

/// Sum of sigma_bit over positions [begin, end) of two equal-length vectors.
PartialSum plain_partial(const std::vector<Bit>& a, const std::vector<Bit>& b, std::size_t begin,
                         std::size_t end);

/// Contribution of the restriction segments of two projected codes.
PartialSum segment_partial(const BitCode& a, const BitCode& b, const SimilarityConfig& cfg,
                           std::vector<SegmentEntry>* entries = nullptr);

/// Score of a merged partial: the weighted mean, 1 when nothing is weighted,
/// scaled by the code-generativity ratio when fcg counts are given.
std::optional<double> aggregate(const PartialSum& total,
                                std::optional<std::pair<std::uint64_t, std::uint64_t>> fcg_pair);

/// Turns a merged partial into the final score, applying the code-generativity
/// penalty when configured.
SimilarityReport finish(const BitCode& a, const BitCode& b, const PartialSum& total,
                        const SimilarityConfig& cfg);

SimilarityReport sigma_hat(const BitCode& a, const BitCode& b, const SimilarityConfig& cfg = {});

/// Similarity of the conjunction and the disjunction of two concepts.
SimilarityReport bitsim_jaccard(const Concept& ci, const Concept& cj, const EncodingContext& ctx,
                                const SimilarityConfig& cfg = {});

/// Number of full sign assignments the code covers. Each position resolves to
/// + or -; 1 and Y' cover +, X'' and Y cover -, 0, X, X', T' and T cover both,
/// F' and F cover neither. Compounds take the union or intersection.
std::uint64_t fcg(const BitCode& code, int cap = 20);

enum class Verdict { True, False, Unknown };
const char* to_string(Verdict v);

/// Does a denote a sub-concept of b? Decisive only where the answer is sound.
Verdict subsumes(const BitCode& a, const BitCode& b);

/// Positionwise order test over plain bits only, for diagnostics.
bool positionwise_leq(const BitCode& a, const BitCode& b);

/// Bitwise AND of two atomic codes.
BitCode lcs_atomic(std::string_view a, std::string_view b, const EncodingContext& ctx);

/// Name of the atomic concept with exactly this code, if any.
std::optional<std::string> atomic_name_of(const BitCode& code, const EncodingContext& ctx);

}  // namespace bitsim
