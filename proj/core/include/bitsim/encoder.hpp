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
#include <string>
#include <string_view>
#include <vector>

#include "bitsim/bit_algebra.hpp"
#include "bitsim/dl.hpp"

namespace bitsim {

struct Segment;

/// Image of a concept under the bit interpretation.
///
/// A Plain code is a vector of bits (index 0 is position 1, the rightmost
/// character when serialized) followed by restriction segments. A Join or Meet
/// code is a compound over at least two operands of equal width and carries no
/// bits or segments of its own.
class BitCode {
 public:
  enum class Kind : std::uint8_t { Plain, Join, Meet };

  Kind kind = Kind::Plain;
  std::vector<Bit> bits;
  std::vector<Segment> segments;
  std::vector<BitCode> operands;

  static BitCode plain(std::vector<Bit> bits);
  static BitCode top(int width);
  static BitCode bottom(int width);
  static BitCode compound(Kind op, std::vector<BitCode> operands);

  bool is_compound() const { return kind != Kind::Plain; }
  int width() const;
  /// The canonical top-code: every bit T and nothing else.
  bool is_top() const;
  bool is_bottom() const;
};

struct Segment {
  Quantifier quantifier = Quantifier::Exists;
  std::vector<RoleBit> role;  // index 0 is role position 1
  BitCode filler;

  bool same_key(const Segment& other) const {
    return quantifier == other.quantifier && role == other.role;
  }
};

bool operator==(const BitCode& a, const BitCode& b);
bool operator==(const Segment& a, const Segment& b);

/// Positions of atomic concepts and roles, 1-based. Parents always sit at
/// lower positions than their children.
struct EncodingContext {
  TBox tbox;
  std::vector<std::string> concept_order;  // concept_order[p - 1] sits at position p
  std::vector<std::string> role_order;
  std::map<std::string, int, std::less<>> concept_position;
  std::map<std::string, int, std::less<>> role_position;
  // Reflexive ancestor sets as position lists.
  std::vector<std::vector<int>> concept_ancestors;
  std::vector<std::vector<int>> role_ancestors;

  int concept_width() const { return static_cast<int>(concept_order.size()); }
  int role_width() const { return static_cast<int>(role_order.size()); }
};

EncodingContext build_context(const TBox& tbox);

BitCode encode_atomic(std::string_view name, const EncodingContext& ctx);
std::vector<RoleBit> encode_role(const RoleExpr& role, const EncodingContext& ctx);
BitCode encode(const Concept& expr, const EncodingContext& ctx);

enum class Op { Join, Meet };

/// Binary concept operation on codes (see README for when the result stays
/// positionwise and when it becomes a compound).
BitCode combine(Op op, const BitCode& a, const BitCode& b);
BitCode negate(const BitCode& code);
BitCode normalize(const BitCode& code);

/// Left-pads every bit vector and role code in the tree with Zero.
BitCode pad(const BitCode& code, int width, int role_width);

/// Positionwise join/meet of two plain codes with no exactness check.
/// Segments with equal keys combine their fillers, others are concatenated.
BitCode positionwise(Op op, const BitCode& a, const BitCode& b);

/// Plain upper approximation of a code: compounds are folded positionwise
/// with their own operator, recursively, fillers included.
BitCode project(const BitCode& code);

/// Number of compound nodes' operands, summed over the whole tree.
std::size_t operand_count(const BitCode& code);

std::string serialize(const BitCode& code);
std::string serialize(const std::vector<RoleBit>& role);
/// Parses the serialization grammar. Throws ParseError with the byte offset
/// (column) of the first offending character.
BitCode deserialize(std::string_view text);
/// As above, and checks widths against the context.
BitCode deserialize(std::string_view text, const EncodingContext& ctx);

}  // namespace bitsim
