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

#include "bitsim/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "bitsim/error.hpp"

namespace bitsim {

BitScore sigma_bit(Bit a, Bit b) {
  if (a == Bit::Zero && b == Bit::Zero) return BitScore::ignored();
  if (a == Bit::Top || b == Bit::Top || a == Bit::Bot || b == Bit::Bot) {
    return a == b ? BitScore::score(1.0) : BitScore::undefined();
  }
  if (a == b) return BitScore::score(1.0);
  return BitScore::score(std::ldexp(1.0, -hasse_distance(a, b)));
}

PartialSum plain_partial(const std::vector<Bit>& a, const std::vector<Bit>& b, std::size_t begin,
                         std::size_t end) {
  PartialSum p;
  for (std::size_t i = begin; i < end; ++i) {
    const BitScore s = sigma_bit(a[i], b[i]);
    switch (s.kind) {
      case BitScore::Kind::Ignored: ++p.ignored_count; break;
      case BitScore::Kind::Undefined:
        p.undefined_flag = true;
        p.weight_sum += 1.0;
        break;
      case BitScore::Kind::Score:
        p.score_sum += s.value;
        p.weight_sum += 1.0;
        break;
    }
  }
  return p;
}

namespace {

std::string segment_key(const Segment& s) {
  return std::string(1, to_char(s.quantifier)) + "|" + serialize(s.role);
}

std::vector<Segment> sorted_segments(const BitCode& code) {
  std::vector<std::pair<std::string, const Segment*>> keyed;
  for (const auto& s : code.segments) {
    keyed.emplace_back(segment_key(s) + "|" + serialize(s.filler), &s);
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Segment> out;
  for (const auto& [k, s] : keyed) out.push_back(*s);
  return out;
}

void check_same_width(const BitCode& a, const BitCode& b) {
  if (a.width() != b.width()) {
    throw ContextMismatch("codes of width " + std::to_string(a.width()) + " and " +
                          std::to_string(b.width()) + " come from different contexts");
  }
}

}  // namespace

PartialSum segment_partial(const BitCode& a, const BitCode& b, const SimilarityConfig& cfg,
                           std::vector<SegmentEntry>* entries) {
  PartialSum p;
  if (a.segments.empty() && b.segments.empty()) return p;
  SimilarityConfig inner = cfg;
  inner.generativity_penalty = false;
  const auto sa = sorted_segments(a);
  const auto sb = sorted_segments(b);
  std::vector<bool> used(sb.size(), false);
  for (const auto& s : sa) {
    SegmentEntry entry{segment_key(s), false, 0.0};
    for (std::size_t j = 0; j < sb.size(); ++j) {
      if (used[j] || !s.same_key(sb[j])) continue;
      used[j] = true;
      entry.matched = true;
      entry.score = sigma_hat(s.filler, sb[j].filler, inner).score;
      break;
    }
    p.weight_sum += 1.0;
    if (entry.score) {
      p.score_sum += *entry.score;
    } else {
      p.undefined_flag = true;
    }
    if (entries) entries->push_back(std::move(entry));
  }
  for (std::size_t j = 0; j < sb.size(); ++j) {
    if (used[j]) continue;
    p.weight_sum += 1.0;
    if (entries) entries->push_back({segment_key(sb[j]), false, 0.0});
  }
  return p;
}

std::optional<double> aggregate(const PartialSum& total,
                                std::optional<std::pair<std::uint64_t, std::uint64_t>> fcg_pair) {
  if (total.undefined_flag) return std::nullopt;
  double score = total.weight_sum == 0.0 ? 1.0 : total.score_sum / total.weight_sum;
  if (fcg_pair && fcg_pair->first != fcg_pair->second) {
    const auto [fa, fb] = *fcg_pair;
    score *= static_cast<double>(std::min(fa, fb)) / static_cast<double>(std::max(fa, fb));
  }
  return score;
}

SimilarityReport finish(const BitCode& a, const BitCode& b, const PartialSum& total,
                        const SimilarityConfig& cfg) {
  SimilarityReport r;
  r.total = total;
  if (total.undefined_flag) return r;
  if (cfg.generativity_penalty) r.fcg_pair = {fcg(a, cfg.fcg_cap), fcg(b, cfg.fcg_cap)};
  r.score = aggregate(total, r.fcg_pair);
  return r;
}

SimilarityReport sigma_hat(const BitCode& a, const BitCode& b, const SimilarityConfig& cfg) {
  check_same_width(a, b);
  if (a.is_top() || a.is_bottom() || b.is_top() || b.is_bottom()) {
    SimilarityReport r;
    r.code_level = true;
    if (a == b) r.score = 1.0;
    return r;
  }
  const BitCode pa = project(a);
  const BitCode pb = project(b);
  PartialSum total = plain_partial(pa.bits, pb.bits, 0, pa.bits.size());
  std::vector<SegmentEntry> seg_entries;
  total.merge(segment_partial(pa, pb, cfg, &seg_entries));
  SimilarityReport r = finish(a, b, total, cfg);
  for (std::size_t i = 0; i < pa.bits.size(); ++i) {
    r.per_position.push_back(
        {static_cast<int>(i) + 1, pa.bits[i], pb.bits[i], 1.0, sigma_bit(pa.bits[i], pb.bits[i])});
  }
  r.segments = std::move(seg_entries);
  return r;
}

SimilarityReport bitsim_jaccard(const Concept& ci, const Concept& cj, const EncodingContext& ctx,
                                const SimilarityConfig& cfg) {
  const BitCode a = encode(ci, ctx);
  const BitCode b = encode(cj, ctx);
  return sigma_hat(combine(Op::Meet, a, b), combine(Op::Join, a, b), cfg);
}

namespace {

bool has_segments(const BitCode& code) {
  if (!code.segments.empty()) return true;
  return std::any_of(code.operands.begin(), code.operands.end(), has_segments);
}

// Bit 0 of a mask is + for position 1.
using Cover = std::vector<std::uint32_t>;

Cover cover_of(const BitCode& code) {
  if (code.is_compound()) {
    Cover acc = cover_of(code.operands.front());
    for (std::size_t i = 1; i < code.operands.size(); ++i) {
      const Cover next = cover_of(code.operands[i]);
      Cover out;
      if (code.kind == BitCode::Kind::Join) {
        std::set_union(acc.begin(), acc.end(), next.begin(), next.end(), std::back_inserter(out));
      } else {
        std::set_intersection(acc.begin(), acc.end(), next.begin(), next.end(),
                              std::back_inserter(out));
      }
      acc = std::move(out);
    }
    return acc;
  }
  Cover acc{0};
  for (std::size_t i = 0; i < code.bits.size(); ++i) {
    const Bit b = code.bits[i];
    const bool plus = b == Bit::One || b == Bit::YPrime || b == Bit::Zero || b == Bit::X ||
                      b == Bit::XPrime || b == Bit::TopPrime || b == Bit::Top;
    const bool minus = b == Bit::XDoublePrime || b == Bit::Y || b == Bit::Zero || b == Bit::X ||
                       b == Bit::XPrime || b == Bit::TopPrime || b == Bit::Top;
    Cover next;
    next.reserve(acc.size() * (plus && minus ? 2 : 1));
    for (std::uint32_t m : acc) {
      if (minus) next.push_back(m);
      if (plus) next.push_back(m | (std::uint32_t{1} << i));
    }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

}  // namespace

std::uint64_t fcg(const BitCode& code, int cap) {
  if (has_segments(code)) {
    throw UnsupportedFragment("unsupported fragment: code-generativity needs a code without "
                              "restriction segments");
  }
  if (code.width() > cap) {
    throw CapExceeded("enumeration cap exceeded: width " + std::to_string(code.width()) +
                      " > " + std::to_string(cap));
  }
  return cover_of(code).size();
}

BitCode lcs_atomic(std::string_view a, std::string_view b, const EncodingContext& ctx) {
  for (auto n : {a, b}) {
    if (!ctx.concept_position.count(n)) {
      if (ctx.tbox.definition(n)) {
        throw UnsupportedFragment("lcs needs atomic concepts: " + std::string(n) + " is defined");
      }
      throw UndeclaredName(std::string(n));
    }
  }
  BitCode ca = encode_atomic(a, ctx);
  const BitCode cb = encode_atomic(b, ctx);
  for (std::size_t i = 0; i < ca.bits.size(); ++i) {
    ca.bits[i] = ca.bits[i] == Bit::One && cb.bits[i] == Bit::One ? Bit::One : Bit::Zero;
  }
  return ca;
}

std::optional<std::string> atomic_name_of(const BitCode& code, const EncodingContext& ctx) {
  for (const auto& name : ctx.concept_order) {
    if (encode_atomic(name, ctx) == code) return name;
  }
  return std::nullopt;
}

}  // namespace bitsim
