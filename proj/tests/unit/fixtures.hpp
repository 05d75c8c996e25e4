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

#include <map>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "bitsim/encoder.hpp"

namespace bitsim::testing {

inline TBox diamond() {
  return parse_tbox("concept A\nB sub A\nC sub A\nD sub B\nD sub C\n");
}

inline TBox vee() { return parse_tbox("concept A\nB sub A\nC sub A\n"); }

// Hasse diagram written out by hand, as character pairs (lower, upper).
inline const std::vector<std::pair<char, char>>& hand_hasse() {
  static const std::vector<std::pair<char, char>> edges = {
      {'F', 'f'}, {'f', 'y'}, {'f', 'Y'}, {'y', '1'}, {'Y', 'N'}, {'Y', '0'}, {'1', '0'},
      {'0', 'X'}, {'0', 'x'}, {'N', 'x'}, {'X', 't'}, {'x', 't'}, {'t', 'T'},
  };
  return edges;
}

// Breadth-first distance over the undirected hand-written diagram.
inline int hand_distance(char a, char b) {
  std::map<char, std::vector<char>> adj;
  for (auto [lo, hi] : hand_hasse()) {
    adj[lo].push_back(hi);
    adj[hi].push_back(lo);
  }
  std::map<char, int> dist{{a, 0}};
  std::queue<char> q;
  q.push(a);
  while (!q.empty()) {
    const char c = q.front();
    q.pop();
    for (char n : adj[c]) {
      if (dist.emplace(n, dist[c] + 1).second) q.push(n);
    }
  }
  return dist.at(b);
}

// Mean of 2^-distance over the non-(0,0) positions of two plain bit strings
// over the nine inner symbols.
inline double hand_similarity(const std::string& a, const std::string& b) {
  double sum = 0;
  int weight = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == '0' && b[i] == '0') continue;
    sum += 1.0 / static_cast<double>(1 << hand_distance(a[i], b[i]));
    ++weight;
  }
  return weight == 0 ? 1.0 : sum / weight;
}

}  // namespace bitsim::testing
