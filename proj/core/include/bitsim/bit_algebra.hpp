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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bitsim {

/// The eleven symbols of the bit alphabet.
///
/// Zero is the potential bit and One the property bit; every other symbol is
/// generated from them by join, meet and negation. The enumerator order is the
/// index order of every table in AlgebraTables.
enum class Bit : std::uint8_t {
  Zero,
  One,
  X,             // 1 join 0
  XPrime,        // X'' join 0
  XDoublePrime,  // not 1
  Y,             // X'' meet 0
  YPrime,        // 1 meet 0
  TopPrime,      // Y join Y'
  BotPrime,      // X meet X'
  Top,
  Bot,
};

inline constexpr int kBitCount = 11;

inline constexpr std::array<Bit, kBitCount> kAllBits = {
    Bit::Zero,   Bit::One,      Bit::X,        Bit::XPrime,
    Bit::XDoublePrime, Bit::Y,  Bit::YPrime,   Bit::TopPrime,
    Bit::BotPrime, Bit::Top,    Bit::Bot,
};

constexpr int index_of(Bit b) { return static_cast<int>(b); }

/// Serialization character; a bijection with the eleven symbols.
char to_char(Bit b);
/// Inverse of to_char; nullopt for any other byte.
std::optional<Bit> bit_from_char(char c);
/// Human readable name ("X''", "T'", ...), used in reports.
std::string bit_name(Bit b);

/// Quantifier sub-alphabet. Forall is the symbol 1 and Exists the symbol 0;
/// X and YPrime only arise from segment-level join/meet.
enum class Quantifier : std::uint8_t { Forall, Exists, X, YPrime };

Quantifier negate(Quantifier q);
char to_char(Quantifier q);
std::optional<Quantifier> quantifier_from_char(char c);

/// Role sub-alphabet {1, 0, X, Y'}. Closed under join and meet, no negation.
enum class RoleBit : std::uint8_t { One, Zero, X, YPrime };

Bit to_bit(RoleBit r);
std::optional<RoleBit> role_bit_from(Bit b);
RoleBit join(RoleBit a, RoleBit b);
RoleBit meet(RoleBit a, RoleBit b);
char to_char(RoleBit r);
std::optional<RoleBit> role_bit_from_char(char c);

/// Total Cayley tables for the operators plus the specificity order.
struct AlgebraTables {
  std::array<std::array<Bit, kBitCount>, kBitCount> join{};
  std::array<std::array<Bit, kBitCount>, kBitCount> meet{};
  std::array<Bit, kBitCount> neg{};
  // leq[a][b] == a is at least as specific as b.
  std::array<std::array<bool, kBitCount>, kBitCount> leq{};
  // Undirected shortest-path length in the Hasse diagram.
  std::array<std::array<int, kBitCount>, kBitCount> hasse_dist{};
};

/// Covering pairs (lower, upper) of the canonical Hasse diagram.
const std::vector<std::pair<Bit, Bit>>& hasse_edges();

/// Builds the canonical tables from the family rules and the Hasse diagram.
AlgebraTables build_canonical_tables();

/// Process-wide canonical tables, built once and immutable afterwards.
const AlgebraTables& tables();

inline Bit neg(Bit b) { return tables().neg[index_of(b)]; }
inline Bit join(Bit a, Bit b) { return tables().join[index_of(a)][index_of(b)]; }
inline Bit meet(Bit a, Bit b) { return tables().meet[index_of(a)][index_of(b)]; }
inline bool leq(Bit a, Bit b) { return tables().leq[index_of(a)][index_of(b)]; }
inline int hasse_distance(Bit a, Bit b) {
  return tables().hasse_dist[index_of(a)][index_of(b)];
}

struct ConstraintResult {
  std::string name;
  bool passed = true;
  std::string counterexample;  // first violation, empty when passed
};

struct ConstraintReport {
  std::vector<ConstraintResult> results;

  bool all_passed() const;
  std::vector<std::string> failed_names() const;
};

/// Checks every algebraic law the tables are required to satisfy and returns
/// one entry per law.
ConstraintReport verify_tables(const AlgebraTables& t);

}  // namespace bitsim
