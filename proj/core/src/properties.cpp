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

#include "bitsim/properties.hpp"

#include <algorithm>
#include <set>

#include "bitsim/error.hpp"
#include "bitsim/generate.hpp"

namespace bitsim {

bool PropertyReport::ok() const {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.violations == 0; });
}

const PropertyResult* PropertyReport::find(const std::string& name) const {
  for (const auto& r : results) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

void PropertyReport::write_tsv(std::ostream& out) const {
  out << "property\ttrials\tviolations\tfirst-witness\n";
  for (const auto& r : results) {
    out << r.name << '\t' << r.trials << '\t' << r.violations << '\t' << r.witness << '\n';
  }
}

std::vector<std::optional<double>> conjunct_chain_series(const EncodingContext& ctx,
                                                         const Concept& ci, const Concept& cj,
                                                         const std::vector<std::string>& shared,
                                                         const SimilarityConfig& cfg) {
  const BitCode a = encode(ci, ctx);
  const BitCode b = encode(cj, ctx);
  std::vector<std::optional<double>> series;
  BitCode chain_a;
  BitCode chain_b;
  for (std::size_t n = 0; n < shared.size(); ++n) {
    const BitCode k = encode_atomic(shared[n], ctx);
    const BitCode link_a = combine(Op::Meet, k, a);
    const BitCode link_b = combine(Op::Meet, k, b);
    chain_a = n == 0 ? link_a : combine(Op::Meet, chain_a, link_a);
    chain_b = n == 0 ? link_b : combine(Op::Meet, chain_b, link_b);
    series.push_back(sigma_hat(chain_a, chain_b, cfg).score);
  }
  return series;
}

namespace {

struct Tally {
  PropertyResult result;

  explicit Tally(std::string name) { result.name = std::move(name); }
  void trial() { ++result.trials; }
  void fail(const std::string& witness) {
    if (result.violations++ == 0) result.witness = witness;
  }
};

std::optional<double> score_of(const BitCode& a, const BitCode& b, const SimilarityConfig& cfg,
                               bool& skipped) {
  try {
    return sigma_hat(a, b, cfg).score;
  } catch (const UnsupportedFragment&) {
    skipped = true;
  } catch (const CapExceeded&) {
    skipped = true;
  }
  return std::nullopt;
}

std::string show(std::optional<double> s) { return s ? std::to_string(*s) : "undefined"; }

// A rewrite that must leave the code unchanged.
ConceptPtr rewrite(Rng& rng, const ConceptPtr& e) {
  std::vector<int> options = {0, 1};  // double negation, idempotence
  if (e->kind == Concept::Kind::And || e->kind == Concept::Kind::Or) options.push_back(2);
  if (e->kind == Concept::Kind::Not &&
      (e->lhs->kind == Concept::Kind::And || e->lhs->kind == Concept::Kind::Or)) {
    options.push_back(3);
  }
  switch (rng.pick(options)) {
    case 0: return not_(not_(e));
    case 1: return rng.chance(0.5) ? and_(e, e) : or_(e, e);
    case 2: return e->kind == Concept::Kind::And ? and_(e->rhs, e->lhs) : or_(e->rhs, e->lhs);
    default: {
      const auto& inner = e->lhs;
      return inner->kind == Concept::Kind::And ? or_(not_(inner->lhs), not_(inner->rhs))
                                               : and_(not_(inner->lhs), not_(inner->rhs));
    }
  }
}

// Projection with segments in a fixed order, as the scorer pairs them.
BitCode ordered_projection(const BitCode& code) {
  BitCode p = project(code);
  for (auto& s : p.segments) s.filler = ordered_projection(s.filler);
  std::sort(p.segments.begin(), p.segments.end(), [](const Segment& x, const Segment& y) {
    const std::string kx = to_char(x.quantifier) + serialize(x.role) + serialize(x.filler);
    const std::string ky = to_char(y.quantifier) + serialize(y.role) + serialize(y.filler);
    return kx < ky;
  });
  return p;
}

std::string fresh_prefix(const TBox& tbox) {
  std::string prefix = "Shared";
  auto clashes = [&](const std::string& p) {
    for (const auto& c : tbox.concepts) {
      if (c.rfind(p, 0) == 0) return true;
    }
    for (const auto& [n, e] : tbox.definitions) {
      if (n.rfind(p, 0) == 0) return true;
    }
    return false;
  };
  while (clashes(prefix)) prefix += "_";
  return prefix;
}

}  // namespace

PropertyReport check_properties(const TBox& tbox, const SimilarityConfig& cfg, std::uint64_t seed,
                                int trials) {
  const EncodingContext ctx = build_context(tbox);
  Rng rng(seed);
  SimilarityConfig plain_cfg = cfg;
  plain_cfg.generativity_penalty = false;
  const ExprFlavor flavor = tbox.roles.empty() ? ExprFlavor::Propositional : ExprFlavor::WithRoles;
  auto random_concept = [&]() {
    if (rng.chance(0.3)) {
      if (!tbox.definitions.empty() && rng.chance(0.3)) {
        return atom(rng.pick(tbox.definitions).first);
      }
      return atom(rng.pick(tbox.concepts));
    }
    return random_expr(rng, tbox, rng.range(1, 3), flavor);
  };

  Tally positiveness{"positiveness"};
  Tally reflexivity{"reflexivity"};
  Tally maximality{"maximality"};
  Tally symmetry{"symmetry"};
  Tally closure{"equivalence-closure"};
  Tally invariance{"equivalence-invariance"};
  Tally preservation{"subsumption-preservation"};
  Tally reverse{"reverse-subsumption-preservation"};
  Tally structural{"structural-dependency"};
  Tally strict{"strict-monotonicity"};

  for (int t = 0; t < trials; ++t) {
    const ConceptPtr ea = random_concept();
    const ConceptPtr eb = random_concept();
    const ConceptPtr ec = random_concept();
    const BitCode a = encode(*ea, ctx);
    const BitCode b = encode(*eb, ctx);
    const BitCode c = encode(*ec, ctx);
    const std::string pair_text = serialize(a) + " " + serialize(b);
    bool skipped = false;

    const auto ab = score_of(a, b, cfg, skipped);
    const auto ba = score_of(b, a, cfg, skipped);
    const auto aa = score_of(a, a, cfg, skipped);
    const auto bc = score_of(b, c, cfg, skipped);
    if (skipped) continue;

    if (ab) {
      positiveness.trial();
      if (!(*ab >= 0.0 && *ab <= 1.0)) positiveness.fail(pair_text + " = " + show(ab));
    }
    reflexivity.trial();
    if (aa != 1.0) reflexivity.fail(serialize(a) + " = " + show(aa));
    if (bc) {
      maximality.trial();
      if (!aa || *aa < *bc) maximality.fail(serialize(a) + " vs " + serialize(b) + " " + serialize(c));
    }
    symmetry.trial();
    if (ab != ba) symmetry.fail(pair_text + ": " + show(ab) + " vs " + show(ba));

    bool unused = false;
    const auto plain_ab = score_of(a, b, plain_cfg, unused);
    if (plain_ab) {
      closure.trial();
      const bool identical = ordered_projection(a) == ordered_projection(b);
      if ((*plain_ab == 1.0) != identical) closure.fail(pair_text + " = " + show(plain_ab));
    }

    const ConceptPtr ea2 = rewrite(rng, ea);
    const BitCode a2 = encode(*ea2, ctx);
    const auto a2b = score_of(a2, b, cfg, skipped);
    if (!skipped) {
      invariance.trial();
      if (a2b != ab) {
        invariance.fail(print(*ea) + " vs " + print(*ea2) + ": " + show(ab) + " vs " + show(a2b));
      }
    }
  }

  const int atoms = ctx.concept_width();
  std::vector<BitCode> atomic;
  for (const auto& name : ctx.concept_order) atomic.push_back(encode_atomic(name, ctx));
  auto is_ancestor = [&](int child, int parent) {  // 0-based indices, reflexive
    const auto& anc = ctx.concept_ancestors[child];
    return std::find(anc.begin(), anc.end(), parent + 1) != anc.end();
  };
  constexpr std::int64_t kTripleCap = 200000;

  std::int64_t chains = 0;
  for (int i = 0; i < atoms && chains < kTripleCap; ++i) {
    for (int j : ctx.concept_ancestors[i]) {
      const int jj = j - 1;
      if (jj == i) continue;
      for (int k : ctx.concept_ancestors[jj]) {
        const int kk = k - 1;
        if (kk == jj) continue;
        ++chains;
        bool s = false;
        const auto ij = score_of(atomic[i], atomic[jj], cfg, s);
        const auto ik = score_of(atomic[i], atomic[kk], cfg, s);
        const auto jk = score_of(atomic[jj], atomic[kk], cfg, s);
        if (s) continue;
        const std::string witness = ctx.concept_order[i] + " <= " + ctx.concept_order[jj] +
                                    " <= " + ctx.concept_order[kk];
        preservation.trial();
        if (!ij || !ik || *ij < *ik) preservation.fail(witness);
        reverse.trial();
        if (!jk || !ik || *jk < *ik) reverse.fail(witness);
      }
    }
  }

  auto strict_triple = [&](int i, int j, int k) {
    if (i == j || i == k || j == k) return;
    if (ctx.concept_ancestors[j].size() != ctx.concept_ancestors[k].size()) return;
    std::set<int> common_ij, common_ik;
    for (int p = 0; p < atoms; ++p) {
      if (is_ancestor(i, p) && is_ancestor(j, p)) common_ij.insert(p);
      if (is_ancestor(i, p) && is_ancestor(k, p)) common_ik.insert(p);
    }
    const bool proper_subset =
        common_ik.size() < common_ij.size() &&
        std::includes(common_ij.begin(), common_ij.end(), common_ik.begin(), common_ik.end());
    if (!proper_subset) return;
    bool s = false;
    const auto ij = score_of(atomic[i], atomic[j], cfg, s);
    const auto ik = score_of(atomic[i], atomic[k], cfg, s);
    if (s) return;
    strict.trial();
    if (!ij || !ik || !(*ij > *ik)) {
      strict.fail(ctx.concept_order[i] + " " + ctx.concept_order[j] + " " + ctx.concept_order[k] +
                  ": " + show(ij) + " vs " + show(ik));
    }
  };
  if (atoms <= 40) {
    for (int i = 0; i < atoms; ++i) {
      for (int j = 0; j < atoms; ++j) {
        for (int k = 0; k < atoms; ++k) strict_triple(i, j, k);
      }
    }
  } else {
    for (std::int64_t n = 0; n < std::int64_t{trials} * 10; ++n) {
      strict_triple(rng.range(0, atoms - 1), rng.range(0, atoms - 1), rng.range(0, atoms - 1));
    }
  }

  // Shared conjuncts are fresh atoms unrelated to anything in the TBox.
  const int structural_trials = std::min(trials, 25);
  for (int t = 0; t < structural_trials; ++t) {
    const ConceptPtr ei = random_concept();
    const ConceptPtr ej = random_concept();
    const BitCode ci = encode(*ei, ctx);
    const BitCode cj = encode(*ej, ctx);
    if (ci.is_top() || ci.is_bottom() || cj.is_top() || cj.is_bottom()) continue;
    const BitCode pi = project(ci);
    const BitCode pj = project(cj);
    const int n_max =
        16 * (atoms + static_cast<int>(pi.segments.size() + pj.segments.size()) + 1);
    TBox extended = tbox;
    const std::string prefix = fresh_prefix(tbox);
    std::vector<std::string> shared;
    for (int n = 1; n <= n_max; ++n) {
      shared.push_back(prefix + std::to_string(n));
      extended.concepts.push_back(shared.back());
    }
    const EncodingContext ext_ctx = build_context(extended);
    std::vector<std::optional<double>> series;
    try {
      series = conjunct_chain_series(ext_ctx, *ei, *ej, shared, plain_cfg);
    } catch (const Error&) {
      continue;
    }
    if (series.empty() || !series.front()) continue;
    structural.trial();
    bool monotone = true;
    for (std::size_t n = 0; n < series.size(); ++n) {
      if (!series[n] || (n > 0 && *series[n] < *series[n - 1])) monotone = false;
    }
    if (!monotone || !series.back() || *series.back() < 0.9) {
      structural.fail(print(*ei) + " / " + print(*ej) + ": final " + show(series.back()));
    }
  }

  PropertyReport report;
  for (Tally* tally : {&positiveness, &reflexivity, &maximality, &symmetry, &closure, &invariance,
                       &preservation, &reverse, &structural, &strict}) {
    report.results.push_back(tally->result);
  }
  return report;
}

}  // namespace bitsim
