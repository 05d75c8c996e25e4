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

#include "bitsim/encoder.hpp"

#include <algorithm>
#include <set>

#include "bitsim/error.hpp"

namespace bitsim {

BitCode BitCode::plain(std::vector<Bit> bits) {
  BitCode c;
  c.bits = std::move(bits);
  return c;
}

BitCode BitCode::top(int width) { return plain(std::vector<Bit>(width, Bit::Top)); }
BitCode BitCode::bottom(int width) { return plain(std::vector<Bit>(width, Bit::Bot)); }

BitCode BitCode::compound(Kind op, std::vector<BitCode> operands) {
  BitCode c;
  c.kind = op;
  c.operands = std::move(operands);
  return c;
}

int BitCode::width() const {
  if (is_compound()) return operands.empty() ? 0 : operands.front().width();
  return static_cast<int>(bits.size());
}

bool BitCode::is_top() const {
  return kind == Kind::Plain && segments.empty() && !bits.empty() &&
         std::all_of(bits.begin(), bits.end(), [](Bit b) { return b == Bit::Top; });
}

bool BitCode::is_bottom() const {
  return kind == Kind::Plain && segments.empty() && !bits.empty() &&
         std::all_of(bits.begin(), bits.end(), [](Bit b) { return b == Bit::Bot; });
}

bool operator==(const BitCode& a, const BitCode& b) {
  return a.kind == b.kind && a.bits == b.bits && a.segments == b.segments &&
         a.operands == b.operands;
}

bool operator==(const Segment& a, const Segment& b) {
  return a.quantifier == b.quantifier && a.role == b.role && a.filler == b.filler;
}

EncodingContext build_context(const TBox& tbox) {
  validate(tbox);
  if (tbox.concepts.empty()) throw Error("TBox declares no atomic concepts");

  EncodingContext ctx;
  ctx.tbox = tbox;

  auto place = [](const std::vector<std::string>& names,
                  const std::vector<std::pair<std::string, std::string>>& edges,
                  std::vector<std::string>& order, std::map<std::string, int, std::less<>>& pos,
                  std::vector<std::vector<int>>& ancestors, const char* what) {
    std::vector<bool> placed(names.size(), false);
    auto index = [&](const std::string& n) {
      return static_cast<std::size_t>(std::find(names.begin(), names.end(), n) - names.begin());
    };
    while (order.size() < names.size()) {
      bool progress = false;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (placed[i]) continue;
        const bool ready = std::all_of(edges.begin(), edges.end(), [&](const auto& e) {
          return e.first != names[i] || placed[index(e.second)];
        });
        if (ready) {
          placed[i] = true;
          order.push_back(names[i]);
          pos[names[i]] = static_cast<int>(order.size());
          progress = true;
          break;  // restart so the earliest declared ready name always wins
        }
      }
      if (!progress) throw CycleError(std::string("cycle in ") + what);
    }
    ancestors.assign(order.size(), {});
    for (std::size_t p = 0; p < order.size(); ++p) {
      std::set<int> seen{static_cast<int>(p) + 1};
      std::vector<std::string> stack{order[p]};
      while (!stack.empty()) {
        const std::string n = stack.back();
        stack.pop_back();
        for (const auto& [child, parent] : edges) {
          if (child == n && seen.insert(pos[parent]).second) stack.push_back(parent);
        }
      }
      ancestors[p].assign(seen.begin(), seen.end());
    }
  };
  place(tbox.concepts, tbox.concept_inclusions, ctx.concept_order, ctx.concept_position,
        ctx.concept_ancestors, "concept hierarchy");
  place(tbox.roles, tbox.role_inclusions, ctx.role_order, ctx.role_position,
        ctx.role_ancestors, "role hierarchy");
  return ctx;
}

BitCode encode_atomic(std::string_view name, const EncodingContext& ctx) {
  auto it = ctx.concept_position.find(name);
  if (it == ctx.concept_position.end()) throw UndeclaredName(std::string(name));
  std::vector<Bit> bits(ctx.concept_width(), Bit::Zero);
  for (int p : ctx.concept_ancestors[it->second - 1]) bits[p - 1] = Bit::One;
  return BitCode::plain(std::move(bits));
}

std::vector<RoleBit> encode_role(const RoleExpr& role, const EncodingContext& ctx) {
  if (role.kind == RoleExpr::Kind::Atomic) {
    auto it = ctx.role_position.find(role.name);
    if (it == ctx.role_position.end()) throw UndeclaredName(role.name);
    std::vector<RoleBit> bits(ctx.role_width(), RoleBit::Zero);
    for (int p : ctx.role_ancestors[it->second - 1]) bits[p - 1] = RoleBit::One;
    return bits;
  }
  auto a = encode_role(*role.lhs, ctx);
  const auto b = encode_role(*role.rhs, ctx);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i] = role.kind == RoleExpr::Kind::Union ? join(a[i], b[i]) : meet(a[i], b[i]);
  }
  return a;
}

BitCode encode(const Concept& expr, const EncodingContext& ctx) {
  const int width = ctx.concept_width();
  switch (expr.kind) {
    case Concept::Kind::Atomic:
      if (auto d = ctx.tbox.definition(expr.name)) return encode(*d, ctx);
      return encode_atomic(expr.name, ctx);
    case Concept::Kind::Top: return BitCode::top(width);
    case Concept::Kind::Bottom: return BitCode::bottom(width);
    case Concept::Kind::Not: return negate(encode(*expr.lhs, ctx));
    case Concept::Kind::And:
      return combine(Op::Meet, encode(*expr.lhs, ctx), encode(*expr.rhs, ctx));
    case Concept::Kind::Or:
      return combine(Op::Join, encode(*expr.lhs, ctx), encode(*expr.rhs, ctx));
    case Concept::Kind::All:
    case Concept::Kind::Some: {
      BitCode code = BitCode::plain(std::vector<Bit>(width, Bit::Zero));
      Segment seg;
      seg.quantifier =
          expr.kind == Concept::Kind::All ? Quantifier::Forall : Quantifier::Exists;
      seg.role = encode_role(*expr.role, ctx);
      seg.filler = encode(*expr.lhs, ctx);
      code.segments.push_back(std::move(seg));
      return normalize(code);
    }
  }
  return BitCode::top(width);
}

namespace {

BitCode::Kind kind_of(Op op) { return op == Op::Join ? BitCode::Kind::Join : BitCode::Kind::Meet; }
Op dual(Op op) { return op == Op::Join ? Op::Meet : Op::Join; }
Bit apply(Op op, Bit a, Bit b) { return op == Op::Join ? join(a, b) : meet(a, b); }

int role_width_of(const BitCode& code) {
  int w = 0;
  for (const auto& s : code.segments) {
    w = std::max({w, static_cast<int>(s.role.size()), role_width_of(s.filler)});
  }
  for (const auto& o : code.operands) w = std::max(w, role_width_of(o));
  return w;
}

std::string segment_order_key(const Segment& s) {
  std::string key(1, to_char(s.quantifier));
  key += serialize(s.role);
  key += '|';
  key += serialize(s.filler);
  return key;
}

bool unique_keys(const std::vector<Segment>& segs) {
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (segs[i].same_key(segs[j])) return false;
    }
  }
  return true;
}

// The quantifier whose segments distribute over op exactly:
// all(r,C) and all(r,D) is all(r, and(C,D)); some(r,C) or some(r,D) is
// some(r, or(C,D)).
Quantifier mergeable_quantifier(Op op) {
  return op == Op::Meet ? Quantifier::Forall : Quantifier::Exists;
}

// A plain pair combines positionwise without losing information when the two
// codes differ in at most one component (a bit position or a segment filler)
// and a differing segment distributes over op.
bool lossless(Op op, const BitCode& a, const BitCode& b) {
  int differing = 0;
  for (std::size_t i = 0; i < a.bits.size(); ++i) {
    if (a.bits[i] != b.bits[i]) ++differing;
  }
  if (a.segments.size() != b.segments.size()) return false;
  if (!unique_keys(a.segments) || !unique_keys(b.segments)) return false;
  for (const auto& sa : a.segments) {
    auto it = std::find_if(b.segments.begin(), b.segments.end(),
                           [&](const Segment& sb) { return sa.same_key(sb); });
    if (it == b.segments.end()) return false;
    if (!(sa.filler == it->filler)) {
      if (sa.quantifier != mergeable_quantifier(op)) return false;
      ++differing;
    }
  }
  return differing <= 1;
}

BitCode merge_plain(Op op, const BitCode& a, const BitCode& b, bool exact) {
  BitCode out;
  out.bits.resize(a.bits.size());
  for (std::size_t i = 0; i < a.bits.size(); ++i) out.bits[i] = apply(op, a.bits[i], b.bits[i]);
  std::vector<bool> used(b.segments.size(), false);
  for (const auto& sa : a.segments) {
    Segment merged = sa;
    for (std::size_t j = 0; j < b.segments.size(); ++j) {
      if (!used[j] && sa.same_key(b.segments[j])) {
        used[j] = true;
        merged.filler = exact ? combine(op, sa.filler, b.segments[j].filler)
                              : positionwise(op, project(sa.filler), project(b.segments[j].filler));
        break;
      }
    }
    out.segments.push_back(std::move(merged));
  }
  for (std::size_t j = 0; j < b.segments.size(); ++j) {
    if (!used[j]) out.segments.push_back(b.segments[j]);
  }
  return out;
}

}  // namespace

BitCode pad(const BitCode& code, int width, int role_width) {
  BitCode out = code;
  if (out.is_compound()) {
    for (auto& o : out.operands) o = pad(o, width, role_width);
    return out;
  }
  if (static_cast<int>(out.bits.size()) < width) {
    // A top/bottom code stays canonical under padding.
    const Bit fill = code.is_top() ? Bit::Top : code.is_bottom() ? Bit::Bot : Bit::Zero;
    out.bits.resize(width, fill);
  }
  for (auto& s : out.segments) {
    if (static_cast<int>(s.role.size()) < role_width) s.role.resize(role_width, RoleBit::Zero);
    s.filler = pad(s.filler, width, role_width);
  }
  return out;
}

BitCode positionwise(Op op, const BitCode& a, const BitCode& b) {
  return merge_plain(op, a, b, false);
}

BitCode project(const BitCode& code) {
  if (!code.is_compound()) {
    BitCode out = code;
    for (auto& s : out.segments) s.filler = project(s.filler);
    return out;
  }
  const Op op = code.kind == BitCode::Kind::Join ? Op::Join : Op::Meet;
  BitCode acc = project(code.operands.front());
  for (std::size_t i = 1; i < code.operands.size(); ++i) {
    acc = positionwise(op, acc, project(code.operands[i]));
  }
  return acc;
}

std::size_t operand_count(const BitCode& code) {
  std::size_t n = code.operands.size();
  for (const auto& o : code.operands) n += operand_count(o);
  for (const auto& s : code.segments) n += operand_count(s.filler);
  return n;
}

BitCode normalize(const BitCode& code) {
  const int width = code.width();
  if (!code.is_compound()) {
    BitCode out = code;
    for (auto& s : out.segments) s.filler = normalize(s.filler);
    std::sort(out.segments.begin(), out.segments.end(), [](const Segment& x, const Segment& y) {
      return segment_order_key(x) < segment_order_key(y);
    });
    const auto& bits = out.bits;
    auto any = [&](Bit v) { return std::find(bits.begin(), bits.end(), v) != bits.end(); };
    auto every = [&](Bit v) {
      return !bits.empty() && std::all_of(bits.begin(), bits.end(), [&](Bit b) { return b == v; });
    };
    if (any(Bit::Top)) return BitCode::top(width);
    if (any(Bit::Bot)) return BitCode::bottom(width);
    if (every(Bit::TopPrime)) return BitCode::top(width);
    if (every(Bit::BotPrime)) return BitCode::bottom(width);
    return out;
  }

  const bool is_join = code.kind == BitCode::Kind::Join;
  std::vector<BitCode> flat;
  for (const auto& o : code.operands) {
    BitCode n = normalize(o);
    if (n.kind == code.kind) {
      for (auto& inner : n.operands) flat.push_back(std::move(inner));
    } else {
      flat.push_back(std::move(n));
    }
  }
  std::vector<std::pair<std::string, BitCode>> keyed;
  for (auto& o : flat) {
    if (is_join ? o.is_top() : o.is_bottom()) return o;
    if (is_join ? o.is_bottom() : o.is_top()) continue;
    keyed.emplace_back(serialize(o), std::move(o));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& x, const auto& y) { return x.first == y.first; }),
              keyed.end());
  if (keyed.empty()) return is_join ? BitCode::bottom(width) : BitCode::top(width);
  if (keyed.size() == 1) return std::move(keyed.front().second);
  BitCode out;
  out.kind = code.kind;
  for (auto& [k, o] : keyed) out.operands.push_back(std::move(o));
  return out;
}

BitCode negate(const BitCode& code) {
  BitCode out = code;
  if (out.is_compound()) {
    out.kind = out.kind == BitCode::Kind::Join ? BitCode::Kind::Meet : BitCode::Kind::Join;
    for (auto& o : out.operands) o = negate(o);
    return normalize(out);
  }
  for (auto& b : out.bits) b = neg(b);
  for (auto& s : out.segments) {
    s.quantifier = bitsim::negate(s.quantifier);
    s.filler = negate(s.filler);
  }
  return normalize(out);
}

BitCode combine(Op op, const BitCode& a_in, const BitCode& b_in) {
  const int width = std::max(a_in.width(), b_in.width());
  const int role_width = std::max(role_width_of(a_in), role_width_of(b_in));
  const BitCode a = pad(a_in, width, role_width);
  const BitCode b = pad(b_in, width, role_width);
  if (a == b) return a;

  if (op == Op::Join) {
    if (a.is_top() || b.is_top()) return BitCode::top(width);
    if (a.is_bottom()) return b;
    if (b.is_bottom()) return a;
  } else {
    if (a.is_bottom() || b.is_bottom()) return BitCode::bottom(width);
    if (a.is_top()) return b;
    if (b.is_top()) return a;
  }

  const BitCode::Kind same = kind_of(op);
  const BitCode::Kind other = kind_of(dual(op));

  if (!a.is_compound() && !b.is_compound()) {
    if (lossless(op, a, b)) return normalize(merge_plain(op, a, b, true));
    return normalize(BitCode::compound(same, {a, b}));
  }
  if (a.kind == same || b.kind == same) {
    return normalize(BitCode::compound(same, {a, b}));
  }
  if (a.kind == other && b.kind == other) {
    return normalize(BitCode::compound(same, {a, b}));
  }
  // One side is a compound of the dual operator and the other is plain:
  // distribute the plain code over its operands.
  const BitCode& comp = a.kind == other ? a : b;
  const BitCode& rest = a.kind == other ? b : a;
  std::vector<BitCode> parts;
  parts.reserve(comp.operands.size());
  for (const auto& o : comp.operands) parts.push_back(combine(op, o, rest));
  return normalize(BitCode::compound(other, std::move(parts)));
}

}  // namespace bitsim
