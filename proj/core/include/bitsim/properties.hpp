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
#include <ostream>
#include <string>
#include <vector>

#include "bitsim/similarity.hpp"

namespace bitsim {

struct PropertyResult {
  std::string name;
  std::int64_t trials = 0;
  std::int64_t violations = 0;
  std::string witness;  // first violation, serialized codes
};

struct PropertyReport {
  std::vector<PropertyResult> results;

  bool ok() const;
  const PropertyResult* find(const std::string& name) const;
  void write_tsv(std::ostream& out) const;
};

/// Randomized and exhaustive checks of the similarity properties:
/// positiveness, reflexivity, maximality, symmetry, equivalence closure and
/// invariance, subsumption and reverse subsumption preservation on atomic
/// chains, structural dependency and strict monotonicity.
PropertyReport check_properties(const TBox& tbox, const SimilarityConfig& cfg, std::uint64_t seed,
                                int trials);

/// Scores of and(and(C1, ci), .., and(Cn, ci)) against the same chain over cj,
/// for n = 1 .. shared.size().
std::vector<std::optional<double>> conjunct_chain_series(const EncodingContext& ctx,
                                                         const Concept& ci, const Concept& cj,
                                                         const std::vector<std::string>& shared,
                                                         const SimilarityConfig& cfg);

}  // namespace bitsim
