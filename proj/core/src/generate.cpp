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

#include "bitsim/generate.hpp"

#include <algorithm>

namespace bitsim {

TBox random_dag_tbox(Rng& rng, const DagShape& shape) {
  TBox t;
  for (int i = 1; i <= shape.atoms; ++i) {
    const std::string name = "C" + std::to_string(i);
    t.concepts.push_back(name);
    int parents = 0;
    for (int p = 1; p < i && parents < shape.max_parents; ++p) {
      if (rng.chance(shape.edge_probability)) {
        t.concept_inclusions.emplace_back(name, "C" + std::to_string(p));
        ++parents;
      }
    }
  }
  for (int i = 1; i <= shape.roles; ++i) {
    const std::string name = "r" + std::to_string(i);
    t.roles.push_back(name);
    for (int p = 1; p < i; ++p) {
      if (rng.chance(shape.role_edge_probability)) {
        t.role_inclusions.emplace_back(name, "r" + std::to_string(p));
        break;
      }
    }
  }
  return t;
}

TBox flat_tbox(int atoms, const std::string& prefix) {
  TBox t;
  for (int i = 1; i <= atoms; ++i) t.concepts.push_back(prefix + std::to_string(i));
  return t;
}

RolePtr random_role(Rng& rng, const std::vector<std::string>& roles, int depth) {
  if (depth <= 0 || roles.size() < 2 || rng.chance(0.6)) return role_atom(rng.pick(roles));
  auto a = random_role(rng, roles, depth - 1);
  auto b = random_role(rng, roles, depth - 1);
  return rng.chance(0.5) ? role_union(a, b) : role_inter(a, b);
}

ConceptPtr random_expr(Rng& rng, const std::vector<std::string>& concepts,
                       const std::vector<std::string>& roles, int depth, ExprFlavor flavor) {
  if (depth <= 0 || rng.chance(0.25)) {
    if (flavor != ExprFlavor::Positive && rng.chance(0.08)) {
      return rng.chance(0.5) ? top() : bot();
    }
    return atom(rng.pick(concepts));
  }
  std::vector<int> choices = {0, 1};  // and, or
  if (flavor != ExprFlavor::Positive) choices.push_back(2);  // not
  if (flavor == ExprFlavor::WithRoles && !roles.empty()) {
    choices.push_back(3);  // all
    choices.push_back(4);  // some
  }
  switch (rng.pick(choices)) {
    case 0:
      return and_(random_expr(rng, concepts, roles, depth - 1, flavor),
                  random_expr(rng, concepts, roles, depth - 1, flavor));
    case 1:
      return or_(random_expr(rng, concepts, roles, depth - 1, flavor),
                 random_expr(rng, concepts, roles, depth - 1, flavor));
    case 2: return not_(random_expr(rng, concepts, roles, depth - 1, flavor));
    case 3:
      return all(random_role(rng, roles, 1), random_expr(rng, concepts, roles, depth - 1, flavor));
    default:
      return some(random_role(rng, roles, 1), random_expr(rng, concepts, roles, depth - 1, flavor));
  }
}

ConceptPtr random_expr(Rng& rng, const TBox& tbox, int depth, ExprFlavor flavor) {
  return random_expr(rng, tbox.concepts, tbox.roles, depth, flavor);
}

BitCode random_code(Rng& rng, int width, int depth) {
  if (depth <= 0 || rng.chance(0.4)) {
    static const std::vector<Bit> kSymbols = {Bit::Zero,   Bit::One,          Bit::X,
                                              Bit::XPrime, Bit::XDoublePrime, Bit::Y,
                                              Bit::YPrime, Bit::TopPrime,     Bit::BotPrime};
    // Mostly 0 and 1 so that covers stay non-trivial.
    std::vector<Bit> bits(width);
    for (auto& b : bits) {
      b = rng.chance(0.7) ? (rng.chance(0.5) ? Bit::Zero : Bit::One) : rng.pick(kSymbols);
    }
    return BitCode::plain(std::move(bits));
  }
  std::vector<BitCode> ops;
  const int n = rng.range(2, 3);
  for (int i = 0; i < n; ++i) ops.push_back(random_code(rng, width, depth - 1));
  return BitCode::compound(rng.chance(0.5) ? BitCode::Kind::Join : BitCode::Kind::Meet,
                           std::move(ops));
}

StrictScenario strict_monotonicity_scenario(Rng& rng) {
  // i, j sit under S and P; k sits under S only. k gets one more private
  // ancestor than j so both carry the same number of ancestors.
  const int private_i = rng.range(0, 4);
  const int private_j = rng.range(0, 4);
  const int noise = rng.range(0, 5);

  std::vector<std::string> names = {"S", "P", "I", "J", "K"};
  std::vector<std::pair<std::string, std::string>> edges = {
      {"I", "S"}, {"I", "P"}, {"J", "S"}, {"J", "P"}, {"K", "S"}};
  auto chain = [&](const std::string& owner, int length) {
    std::string below = owner;
    for (int n = 1; n <= length; ++n) {
      const std::string name = owner + "p" + std::to_string(n);
      names.push_back(name);
      edges.emplace_back(below, name);
      below = name;
    }
  };
  chain("I", private_i);
  chain("J", private_j);
  chain("K", private_j + 1);
  for (int n = 1; n <= noise; ++n) names.push_back("N" + std::to_string(n));

  // Shuffle declarations so positions vary between instances.
  for (std::size_t n = names.size(); n > 1; --n) std::swap(names[n - 1], names[rng.below(n)]);

  StrictScenario s;
  s.tbox.concepts = names;
  s.tbox.concept_inclusions = edges;
  s.i = "I";
  s.j = "J";
  s.k = "K";
  return s;
}

}  // namespace bitsim
