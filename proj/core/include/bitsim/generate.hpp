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
#include <random>
#include <string>
#include <vector>

#include "bitsim/dl.hpp"
#include "bitsim/encoder.hpp"

namespace bitsim {

/// Seeded generator with platform-independent draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  int range(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 engine_;
};

struct DagShape {
  int atoms = 8;
  double edge_probability = 0.3;
  int max_parents = 2;
  int roles = 0;
  double role_edge_probability = 0.3;
};

/// Atoms C1..Cn declared in order; parents are always earlier atoms.
TBox random_dag_tbox(Rng& rng, const DagShape& shape);

/// Atoms with no inclusions at all.
TBox flat_tbox(int atoms, const std::string& prefix = "C");

enum class ExprFlavor {
  Positive,       // atoms, and, or
  Propositional,  // adds not, top, bot
  WithRoles,      // adds all, some over role unions and intersections
};

ConceptPtr random_expr(Rng& rng, const std::vector<std::string>& concepts,
                       const std::vector<std::string>& roles, int depth, ExprFlavor flavor);
ConceptPtr random_expr(Rng& rng, const TBox& tbox, int depth, ExprFlavor flavor);
RolePtr random_role(Rng& rng, const std::vector<std::string>& roles, int depth);

/// Random code without segments: plain bits over the nine non-extreme
/// symbols, nested in compounds up to the given depth.
BitCode random_code(Rng& rng, int width, int depth);

/// Three atoms where i and j share two subsumers and i and k share one,
/// with j and k carrying equally many ancestors.
struct StrictScenario {
  TBox tbox;
  std::string i;
  std::string j;
  std::string k;
};

StrictScenario strict_monotonicity_scenario(Rng& rng);

}  // namespace bitsim
