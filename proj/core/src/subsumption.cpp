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

#include <algorithm>

#include "bitsim/error.hpp"
#include "bitsim/similarity.hpp"

namespace bitsim {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

bool positionwise_leq(const BitCode& a, const BitCode& b) {
  const BitCode pa = project(a);
  const BitCode pb = project(b);
  for (std::size_t i = 0; i < pa.bits.size() && i < pb.bits.size(); ++i) {
    if (!leq(pa.bits[i], pb.bits[i])) return false;
  }
  return true;
}

namespace {

// Verdicts are decisive only on the base fragment: bits drawn from {0, 1},
// atomic role codes, and compounds of such codes. There a plain code is the
// conjunction of the atoms at its 1 positions and of its restrictions.

bool is_base(const BitCode& c);

bool is_base_segment(const Segment& s) {
  if (s.quantifier != Quantifier::Forall && s.quantifier != Quantifier::Exists) return false;
  if (!std::all_of(s.role.begin(), s.role.end(),
                   [](RoleBit r) { return r == RoleBit::One || r == RoleBit::Zero; })) {
    return false;
  }
  return is_base(s.filler);
}

bool is_base_plain(const BitCode& c) {
  if (c.is_compound() || c.is_top() || c.is_bottom()) return false;
  if (!std::all_of(c.bits.begin(), c.bits.end(),
                   [](Bit b) { return b == Bit::One || b == Bit::Zero; })) {
    return false;
  }
  return std::all_of(c.segments.begin(), c.segments.end(), is_base_segment);
}

bool is_base(const BitCode& c) {
  if (c.is_top() || c.is_bottom()) return true;
  if (c.is_compound()) return std::all_of(c.operands.begin(), c.operands.end(), is_base);
  return is_base_plain(c);
}

bool is_cube(const BitCode& c) { return is_base_plain(c) && c.segments.empty(); }

bool has_one(const BitCode& c) {
  return std::find(c.bits.begin(), c.bits.end(), Bit::One) != c.bits.end();
}

// Satisfiable for certain. Universal and existential restrictions may clash
// through the role hierarchy, so a code mixing them is not claimed.
bool surely_satisfiable(const BitCode& c) {
  if (c.is_top()) return true;
  if (c.is_bottom()) return false;
  if (c.kind == BitCode::Kind::Join) {
    return std::any_of(c.operands.begin(), c.operands.end(), surely_satisfiable);
  }
  if (!is_base_plain(c)) return false;
  bool has_forall = false;
  bool has_exists = false;
  for (const auto& s : c.segments) {
    if (s.quantifier == Quantifier::Forall) {
      has_forall = true;
    } else {
      has_exists = true;
      if (!surely_satisfiable(s.filler)) return false;
    }
  }
  return !(has_forall && has_exists);
}

Verdict all_of_verdicts(const std::vector<Verdict>& vs) {
  if (std::all_of(vs.begin(), vs.end(), [](Verdict v) { return v == Verdict::True; })) {
    return Verdict::True;
  }
  if (std::any_of(vs.begin(), vs.end(), [](Verdict v) { return v == Verdict::False; })) {
    return Verdict::False;
  }
  return Verdict::Unknown;
}

constexpr std::size_t kMaxDistributed = 4096;

Verdict decide(const BitCode& a, const BitCode& b);

Verdict plain_vs_plain(const BitCode& a, const BitCode& b) {
  if (!is_base_plain(a) || !is_base_plain(b)) return Verdict::Unknown;
  bool all_leq = true;
  bool refuting_position = false;
  for (std::size_t i = 0; i < a.bits.size(); ++i) {
    if (!leq(a.bits[i], b.bits[i])) {
      all_leq = false;
      if (a.bits[i] == Bit::Zero && b.bits[i] == Bit::One) refuting_position = true;
    }
  }
  if (refuting_position && surely_satisfiable(a)) return Verdict::False;
  if (!all_leq) return Verdict::Unknown;
  for (const auto& sb : b.segments) {
    const bool covered = std::any_of(a.segments.begin(), a.segments.end(), [&](const Segment& sa) {
      return sa.same_key(sb) && decide(sa.filler, sb.filler) == Verdict::True;
    });
    if (!covered) return Verdict::Unknown;
  }
  return Verdict::True;
}

Verdict decide(const BitCode& a, const BitCode& b) {
  if (b.is_top() || a.is_bottom()) return Verdict::True;
  if (a.is_top()) {
    if (is_base_plain(b)) {
      const bool needs_successor =
          std::any_of(b.segments.begin(), b.segments.end(),
                      [](const Segment& s) { return s.quantifier == Quantifier::Exists; });
      if (has_one(b) || needs_successor) return Verdict::False;
    }
    if (b.is_bottom()) return Verdict::False;
  }
  if (b.is_bottom()) return surely_satisfiable(a) ? Verdict::False : Verdict::Unknown;

  if (a.kind == BitCode::Kind::Join) {
    std::vector<Verdict> vs;
    for (const auto& o : a.operands) vs.push_back(decide(o, b));
    return all_of_verdicts(vs);
  }
  if (b.kind == BitCode::Kind::Meet) {
    std::vector<Verdict> vs;
    for (const auto& o : b.operands) vs.push_back(decide(a, o));
    return all_of_verdicts(vs);
  }
  if (a.kind == BitCode::Kind::Meet) {
    auto u = std::find_if(a.operands.begin(), a.operands.end(),
                          [](const BitCode& o) { return o.kind == BitCode::Kind::Join; });
    if (u != a.operands.end()) {
      if (u->operands.size() * a.operands.size() > kMaxDistributed) return Verdict::Unknown;
      BitCode spread;
      spread.kind = BitCode::Kind::Join;
      for (const auto& alt : u->operands) {
        BitCode conj;
        conj.kind = BitCode::Kind::Meet;
        for (auto it = a.operands.begin(); it != a.operands.end(); ++it) {
          if (it != u) conj.operands.push_back(*it);
        }
        if (alt.kind == BitCode::Kind::Meet) {
          conj.operands.insert(conj.operands.end(), alt.operands.begin(), alt.operands.end());
        } else {
          conj.operands.push_back(alt);
        }
        spread.operands.push_back(std::move(conj));
      }
      return decide(spread, b);
    }
    for (const auto& o : a.operands) {
      if (decide(o, b) == Verdict::True) return Verdict::True;
    }
    if (std::all_of(a.operands.begin(), a.operands.end(), is_cube)) {
      BitCode conj = a.operands.front();
      for (const auto& o : a.operands) {
        for (std::size_t i = 0; i < conj.bits.size(); ++i) {
          if (o.bits[i] == Bit::One) conj.bits[i] = Bit::One;
        }
      }
      return decide(conj, b);
    }
    return Verdict::Unknown;
  }
  if (b.kind == BitCode::Kind::Join) {
    bool all_false = true;
    for (const auto& o : b.operands) {
      const Verdict v = decide(a, o);
      if (v == Verdict::True) return Verdict::True;
      if (v != Verdict::False) all_false = false;
    }
    // A conjunction of atoms has a least model, which falsifies every
    // disjunct that it does not entail.
    if (all_false && is_cube(a) && std::all_of(b.operands.begin(), b.operands.end(), is_cube)) {
      return Verdict::False;
    }
    return Verdict::Unknown;
  }
  return plain_vs_plain(a, b);
}

}  // namespace

Verdict subsumes(const BitCode& a, const BitCode& b) {
  if (a.width() != b.width()) {
    throw ContextMismatch("codes of width " + std::to_string(a.width()) + " and " +
                          std::to_string(b.width()) + " come from different contexts");
  }
  return decide(a, b);
}

}  // namespace bitsim
