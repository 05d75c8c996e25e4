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

#include "bitsim/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

#include "bitsim/error.hpp"
#include "bitsim/generate.hpp"
#include "bitsim/similarity.hpp"

namespace bitsim {

std::string describe(const Interpretation& interp) {
  std::ostringstream out;
  out << "domain=" << interp.domain_size;
  for (const auto& [name, ext] : interp.concept_ext) {
    out << "; " << name << "={";
    bool first = true;
    for (int d = 0; d < interp.domain_size; ++d) {
      if (ext >> d & 1U) {
        out << (first ? "" : ",") << d;
        first = false;
      }
    }
    out << "}";
  }
  for (const auto& [name, ext] : interp.role_ext) {
    out << "; " << name << "={";
    bool first = true;
    for (int d = 0; d < interp.domain_size; ++d) {
      for (int e = 0; e < interp.domain_size; ++e) {
        if (ext >> (d * interp.domain_size + e) & 1U) {
          out << (first ? "" : ",") << "(" << d << "," << e << ")";
          first = false;
        }
      }
    }
    out << "}";
  }
  return out.str();
}

std::uint64_t role_extension(const RoleExpr& role, const Interpretation& interp) {
  switch (role.kind) {
    case RoleExpr::Kind::Atomic: {
      auto it = interp.role_ext.find(role.name);
      if (it == interp.role_ext.end()) throw UndeclaredName(role.name);
      return it->second;
    }
    case RoleExpr::Kind::Union:
      return role_extension(*role.lhs, interp) | role_extension(*role.rhs, interp);
    case RoleExpr::Kind::Intersection:
      return role_extension(*role.lhs, interp) & role_extension(*role.rhs, interp);
  }
  return 0;
}

namespace {

std::uint32_t successors(std::uint64_t rel, int d, int n) {
  return static_cast<std::uint32_t>(rel >> (d * n)) & ((std::uint32_t{1} << n) - 1);
}

std::uint32_t restrict_ext(bool universal, std::uint64_t rel, std::uint32_t filler, int n) {
  std::uint32_t out = 0;
  for (int d = 0; d < n; ++d) {
    const std::uint32_t succ = successors(rel, d, n);
    const bool in = universal ? (succ & ~filler) == 0 : (succ & filler) != 0;
    if (in) out |= std::uint32_t{1} << d;
  }
  return out;
}

}  // namespace

std::uint32_t extension(const Concept& expr, const Interpretation& interp, const TBox& tbox) {
  const std::uint32_t all_mask = interp.domain_mask();
  switch (expr.kind) {
    case Concept::Kind::Atomic: {
      if (auto d = tbox.definition(expr.name)) return extension(*d, interp, tbox);
      auto it = interp.concept_ext.find(expr.name);
      if (it == interp.concept_ext.end()) throw UndeclaredName(expr.name);
      return it->second & all_mask;
    }
    case Concept::Kind::Top: return all_mask;
    case Concept::Kind::Bottom: return 0;
    case Concept::Kind::Not: return all_mask & ~extension(*expr.lhs, interp, tbox);
    case Concept::Kind::And:
      return extension(*expr.lhs, interp, tbox) & extension(*expr.rhs, interp, tbox);
    case Concept::Kind::Or:
      return extension(*expr.lhs, interp, tbox) | extension(*expr.rhs, interp, tbox);
    case Concept::Kind::All:
    case Concept::Kind::Some:
      return restrict_ext(expr.kind == Concept::Kind::All, role_extension(*expr.role, interp),
                          extension(*expr.lhs, interp, tbox), interp.domain_size);
  }
  return 0;
}

namespace {

// Expressions compiled to index form so that enumeration avoids name lookups.
struct Program {
  struct Node {
    Concept::Kind kind;
    int lhs = -1;
    int rhs = -1;
    int atom = -1;
    int role = -1;  // index into roles
  };
  struct RoleNode {
    RoleExpr::Kind kind;
    int lhs = -1;
    int rhs = -1;
    int atom = -1;
  };
  std::vector<Node> nodes;
  std::vector<RoleNode> roles;
  std::vector<std::string> concept_names;
  std::vector<std::string> role_names;

  static int index_in(std::vector<std::string>& names, const std::string& n) {
    auto it = std::find(names.begin(), names.end(), n);
    if (it != names.end()) return static_cast<int>(it - names.begin());
    names.push_back(n);
    return static_cast<int>(names.size()) - 1;
  }

  int add_role(const RoleExpr& r) {
    RoleNode node{r.kind};
    if (r.kind == RoleExpr::Kind::Atomic) {
      node.atom = index_in(role_names, r.name);
    } else {
      node.lhs = add_role(*r.lhs);
      node.rhs = add_role(*r.rhs);
    }
    roles.push_back(node);
    return static_cast<int>(roles.size()) - 1;
  }

  int add(const Concept& c) {
    Node node{c.kind};
    switch (c.kind) {
      case Concept::Kind::Atomic: node.atom = index_in(concept_names, c.name); break;
      case Concept::Kind::Top:
      case Concept::Kind::Bottom: break;
      case Concept::Kind::Not: node.lhs = add(*c.lhs); break;
      case Concept::Kind::And:
      case Concept::Kind::Or:
        node.lhs = add(*c.lhs);
        node.rhs = add(*c.rhs);
        break;
      case Concept::Kind::All:
      case Concept::Kind::Some:
        node.role = add_role(*c.role);
        node.lhs = add(*c.lhs);
        break;
    }
    nodes.push_back(node);
    return static_cast<int>(nodes.size()) - 1;
  }

  std::uint64_t eval_role(int i, const std::vector<std::uint64_t>& rel) const {
    const RoleNode& r = roles[i];
    switch (r.kind) {
      case RoleExpr::Kind::Atomic: return rel[r.atom];
      case RoleExpr::Kind::Union: return eval_role(r.lhs, rel) | eval_role(r.rhs, rel);
      case RoleExpr::Kind::Intersection: return eval_role(r.lhs, rel) & eval_role(r.rhs, rel);
    }
    return 0;
  }

  std::uint32_t eval(int i, const std::vector<std::uint32_t>& ext,
                     const std::vector<std::uint64_t>& rel, int n) const {
    const Node& c = nodes[i];
    const std::uint32_t mask = (std::uint32_t{1} << n) - 1;
    switch (c.kind) {
      case Concept::Kind::Atomic: return ext[c.atom];
      case Concept::Kind::Top: return mask;
      case Concept::Kind::Bottom: return 0;
      case Concept::Kind::Not: return mask & ~eval(c.lhs, ext, rel, n);
      case Concept::Kind::And: return eval(c.lhs, ext, rel, n) & eval(c.rhs, ext, rel, n);
      case Concept::Kind::Or: return eval(c.lhs, ext, rel, n) | eval(c.rhs, ext, rel, n);
      case Concept::Kind::All:
      case Concept::Kind::Some:
        return restrict_ext(c.kind == Concept::Kind::All, eval_role(c.role, rel),
                            eval(c.lhs, ext, rel, n), n);
    }
    return 0;
  }
};

// Inclusions between the given names implied by the transitive closure of
// the declared hierarchy, as (child index, parent index).
std::vector<std::pair<int, int>> implied_inclusions(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t c = 0; c < names.size(); ++c) {
    std::set<std::string> seen{names[c]};
    std::vector<std::string> stack{names[c]};
    while (!stack.empty()) {
      const std::string n = stack.back();
      stack.pop_back();
      for (const auto& [child, parent] : edges) {
        if (child == n && seen.insert(parent).second) stack.push_back(parent);
      }
    }
    for (std::size_t p = 0; p < names.size(); ++p) {
      if (p != c && seen.count(names[p])) out.emplace_back(static_cast<int>(c), static_cast<int>(p));
    }
  }
  return out;
}

Interpretation make_interp(const Program& prog, const std::vector<std::uint32_t>& ext,
                           const std::vector<std::uint64_t>& rel, int n) {
  Interpretation interp;
  interp.domain_size = n;
  for (std::size_t i = 0; i < prog.concept_names.size(); ++i) {
    interp.concept_ext[prog.concept_names[i]] = ext[i];
  }
  for (std::size_t i = 0; i < prog.role_names.size(); ++i) {
    interp.role_ext[prog.role_names[i]] = rel[i];
  }
  return interp;
}

}  // namespace

OracleResult oracle_subsumes(const Concept& ci, const Concept& cj, const TBox& tbox,
                             const OracleCaps& caps) {
  tbox.check_names(ci);
  tbox.check_names(cj);
  const ConceptPtr ei = tbox.expand(std::make_shared<Concept>(ci));
  const ConceptPtr ej = tbox.expand(std::make_shared<Concept>(cj));
  Program prog;
  const int root_i = prog.add(*ei);
  const int root_j = prog.add(*ej);
  const int c = static_cast<int>(prog.concept_names.size());
  const int r = static_cast<int>(prog.role_names.size());

  OracleResult result;
  const bool roles = has_restriction(*ei) || has_restriction(*ej);
  result.mode = roles ? OracleResult::Mode::Role : OracleResult::Mode::Propositional;
  if (!roles && c > caps.propositional_atoms) {
    throw CapExceeded("enumeration cap exceeded: " + std::to_string(c) + " atoms > " +
                      std::to_string(caps.propositional_atoms));
  }
  if (roles && c + r > caps.role_names) {
    throw CapExceeded("enumeration cap exceeded: " + std::to_string(c + r) + " names > " +
                      std::to_string(caps.role_names));
  }
  const auto concept_incl = implied_inclusions(prog.concept_names, tbox.concept_inclusions);
  const auto role_incl = implied_inclusions(prog.role_names, tbox.role_inclusions);

  const int max_domain = roles ? caps.max_domain : 1;
  result.domain_checked = 0;
  for (int n = 1; n <= max_domain; ++n) {
    const int concept_bits = c * n;
    const int total_bits = concept_bits + r * n * n;
    if (total_bits > caps.enumeration_bits || total_bits > 62) {
      result.complete = false;
      break;
    }
    std::vector<std::uint32_t> ext(c);
    std::vector<std::uint64_t> rel(r);
    const std::uint64_t cmask = (std::uint64_t{1} << n) - 1;
    const std::uint64_t rmask = (std::uint64_t{1} << (n * n)) - 1;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << total_bits); ++code) {
      for (int a = 0; a < c; ++a) ext[a] = static_cast<std::uint32_t>(code >> (a * n) & cmask);
      for (int b = 0; b < r; ++b) rel[b] = code >> (concept_bits + b * n * n) & rmask;
      const bool consistent =
          std::all_of(concept_incl.begin(), concept_incl.end(),
                      [&](const auto& e) { return (ext[e.first] & ~ext[e.second]) == 0; }) &&
          std::all_of(role_incl.begin(), role_incl.end(),
                      [&](const auto& e) { return (rel[e.first] & ~rel[e.second]) == 0; });
      if (!consistent) continue;
      if ((prog.eval(root_i, ext, rel, n) & ~prog.eval(root_j, ext, rel, n)) != 0) {
        result.holds = false;
        result.witness = make_interp(prog, ext, rel, n);
        result.domain_checked = n;
        return result;
      }
    }
    result.domain_checked = n;
  }
  return result;
}

Rational oracle_jaccard(const Concept& ci, const Concept& cj, const TBox& tbox,
                        const OracleCaps& caps) {
  tbox.check_names(ci);
  tbox.check_names(cj);
  const ConceptPtr ei = tbox.expand(std::make_shared<Concept>(ci));
  const ConceptPtr ej = tbox.expand(std::make_shared<Concept>(cj));
  if (has_restriction(*ei) || has_restriction(*ej)) {
    throw UnsupportedFragment("unsupported fragment: the Jaccard oracle is propositional");
  }
  const int c = static_cast<int>(tbox.concepts.size());
  if (c > caps.propositional_atoms) {
    throw CapExceeded("enumeration cap exceeded: " + std::to_string(c) + " atoms > " +
                      std::to_string(caps.propositional_atoms));
  }
  Program prog;
  prog.concept_names = tbox.concepts;  // every atom counts, referenced or not
  const int root_i = prog.add(*ei);
  const int root_j = prog.add(*ej);
  const auto incl = implied_inclusions(prog.concept_names, tbox.concept_inclusions);
  std::uint64_t inter = 0;
  std::uint64_t uni = 0;
  std::vector<std::uint32_t> ext(c);
  const std::vector<std::uint64_t> rel;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << c); ++m) {
    for (int a = 0; a < c; ++a) ext[a] = static_cast<std::uint32_t>(m >> a & 1U);
    const bool consistent = std::all_of(incl.begin(), incl.end(), [&](const auto& e) {
      return (ext[e.first] & ~ext[e.second]) == 0;
    });
    if (!consistent) continue;
    const std::uint32_t x = prog.eval(root_i, ext, rel, 1);
    const std::uint32_t y = prog.eval(root_j, ext, rel, 1);
    inter += x & y;
    uni += x | y;
  }
  if (uni == 0) return {1, 1};
  const std::uint64_t g = std::gcd(inter, uni);
  return {inter / g, uni / g};
}

namespace {

bool admits(Bit b, bool plus) {
  switch (b) {
    case Bit::One:
    case Bit::YPrime: return plus;
    case Bit::XDoublePrime:
    case Bit::Y: return !plus;
    case Bit::BotPrime:
    case Bit::Bot: return false;
    default: return true;
  }
}

bool covers(const BitCode& code, std::uint32_t assignment) {
  switch (code.kind) {
    case BitCode::Kind::Join:
      return std::any_of(code.operands.begin(), code.operands.end(),
                         [&](const BitCode& o) { return covers(o, assignment); });
    case BitCode::Kind::Meet:
      return std::all_of(code.operands.begin(), code.operands.end(),
                         [&](const BitCode& o) { return covers(o, assignment); });
    case BitCode::Kind::Plain: break;
  }
  for (std::size_t i = 0; i < code.bits.size(); ++i) {
    if (!admits(code.bits[i], (assignment >> i & 1U) != 0)) return false;
  }
  return true;
}

bool any_segments(const BitCode& code) {
  if (!code.segments.empty()) return true;
  return std::any_of(code.operands.begin(), code.operands.end(), any_segments);
}

}  // namespace

std::uint64_t oracle_fcg(const BitCode& code) {
  if (any_segments(code)) throw UnsupportedFragment("unsupported fragment: segments present");
  const int n = code.width();
  if (n > 24) throw CapExceeded("enumeration cap exceeded");
  std::uint64_t count = 0;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    if (covers(code, m)) ++count;
  }
  return count;
}

BitCode common_ancestor_code(const std::string& a, const std::string& b,
                             const EncodingContext& ctx) {
  auto ancestors = [&](const std::string& start) {
    std::set<std::string> seen{start};
    std::vector<std::string> stack{start};
    while (!stack.empty()) {
      const std::string n = stack.back();
      stack.pop_back();
      for (const auto& [child, parent] : ctx.tbox.concept_inclusions) {
        if (child == n && seen.insert(parent).second) stack.push_back(parent);
      }
    }
    return seen;
  };
  const auto sa = ancestors(a);
  const auto sb = ancestors(b);
  std::vector<Bit> bits(ctx.concept_width(), Bit::Zero);
  for (const auto& n : sa) {
    if (sb.count(n)) bits[ctx.concept_position.at(n) - 1] = Bit::One;
  }
  return BitCode::plain(std::move(bits));
}

void CrossCheckReport::write_tsv(std::ostream& out) const {
  out << "kind\tinputs\tencoder\toracle\twitness\n";
  for (const auto& r : rows) {
    out << r.kind << '\t' << r.inputs << '\t' << r.encoder << '\t' << r.oracle << '\t'
        << r.witness << '\n';
  }
  auto summary = [&](const char* name, std::int64_t v) {
    out << "summary\t" << name << '\t' << v << "\t\t\n";
  };
  summary("subsumption-pairs", subsumption_pairs);
  summary("agreements", agreements);
  summary("disagreements", disagreements);
  summary("unknown", unknowns);
  summary("documented-incompleteness", documented);
  summary("oracle-inconclusive", inconclusive);
  summary("lcs-pairs", lcs_pairs);
  summary("lcs-disagreements", lcs_disagreements);
  summary("fcg-codes", fcg_codes);
  summary("fcg-disagreements", fcg_disagreements);
}

namespace {

// An existential restriction whose filler encodes to the bottom code; the
// normal form keeps it although its extension is empty.
bool has_empty_existential(const BitCode& c) {
  for (const auto& s : c.segments) {
    if (s.quantifier == Quantifier::Exists && s.filler.is_bottom()) return true;
    if (has_empty_existential(s.filler)) return true;
  }
  return std::any_of(c.operands.begin(), c.operands.end(),
                     [](const BitCode& o) { return has_empty_existential(o); });
}

void compare(const ConceptPtr& ci, const ConceptPtr& cj, const TBox& tbox,
             const EncodingContext& ctx, const OracleCaps& caps, CrossCheckReport& report) {
  const BitCode a = encode(*ci, ctx);
  const BitCode b = encode(*cj, ctx);
  const Verdict enc = subsumes(a, b);
  OracleResult orc;
  try {
    orc = oracle_subsumes(*ci, *cj, tbox, caps);
  } catch (const CapExceeded&) {
    return;
  }
  ++report.subsumption_pairs;
  const std::string inputs = print(*ci) + " <= " + print(*cj);
  const std::string oracle_text =
      orc.holds ? (orc.mode == OracleResult::Mode::Propositional
                       ? "holds"
                       : "holds up to domain " + std::to_string(orc.domain_checked))
                : "refuted";
  const std::string witness = orc.witness ? describe(*orc.witness) : "";
  const bool documented = has_empty_existential(a) || has_empty_existential(b);

  const bool agree = (enc == Verdict::True && orc.holds) || (enc == Verdict::False && !orc.holds);
  if (agree) {
    ++report.agreements;
    return;
  }
  if (documented) {
    ++report.documented;
    report.rows.push_back({"documented-incompleteness", inputs, to_string(enc), oracle_text, witness});
    return;
  }
  if (enc == Verdict::Unknown) {
    ++report.unknowns;
    return;
  }
  if (enc == Verdict::False && orc.holds && orc.mode == OracleResult::Mode::Role && !orc.complete) {
    ++report.inconclusive;
    report.rows.push_back({"oracle-inconclusive", inputs, to_string(enc), oracle_text, witness});
    return;
  }
  ++report.disagreements;
  report.rows.push_back({"disagreement", inputs, to_string(enc), oracle_text, witness});
}

}  // namespace

CrossCheckReport cross_check(const TBox& tbox, int trials, std::uint64_t seed,
                             const OracleCaps& caps) {
  const EncodingContext ctx = build_context(tbox);
  Rng rng(seed);
  CrossCheckReport report;

  for (int t = 0; t < trials; ++t) {
    const ExprFlavor flavor = t % 2 == 0 ? ExprFlavor::Positive : ExprFlavor::Propositional;
    const ConceptPtr ci = random_expr(rng, tbox, rng.range(0, 2), flavor);
    const ConceptPtr cj = random_expr(rng, tbox, rng.range(0, 2), flavor);
    compare(ci, cj, tbox, ctx, caps, report);
  }

  if (!tbox.roles.empty()) {
    const int role_trials = std::max(1, trials / 10);
    for (int t = 0; t < role_trials; ++t) {
      std::vector<std::string> concepts = {rng.pick(tbox.concepts)};
      if (rng.chance(0.5)) concepts.push_back(rng.pick(tbox.concepts));
      const std::vector<std::string> roles = {rng.pick(tbox.roles)};
      const ConceptPtr ci = random_expr(rng, concepts, roles, rng.range(1, 2), ExprFlavor::WithRoles);
      const ConceptPtr cj = random_expr(rng, concepts, roles, rng.range(0, 2), ExprFlavor::WithRoles);
      compare(ci, cj, tbox, ctx, caps, report);
    }
    const RolePtr r = role_atom(tbox.roles.front());
    compare(some(r, bot()), bot(), tbox, ctx, caps, report);
    compare(some(r, bot()), atom(tbox.concepts.front()), tbox, ctx, caps, report);
  }

  const int atoms = static_cast<int>(ctx.concept_order.size());
  for (int x = 0; x < atoms; ++x) {
    for (int y = x; y < atoms; ++y) {
      const auto& a = ctx.concept_order[x];
      const auto& b = ctx.concept_order[y];
      ++report.lcs_pairs;
      const BitCode mine = lcs_atomic(a, b, ctx);
      const BitCode expected = common_ancestor_code(a, b, ctx);
      if (!(mine == expected)) {
        ++report.lcs_disagreements;
        report.rows.push_back({"disagreement", "lcs(" + a + ", " + b + ")", serialize(mine),
                               serialize(expected), ""});
      }
    }
  }

  if (ctx.concept_width() <= 12) {
    const int fcg_trials = std::min(trials, 200);
    for (int t = 0; t < fcg_trials; ++t) {
      const ConceptPtr e = random_expr(rng, tbox, rng.range(0, 3), ExprFlavor::Propositional);
      const BitCode code = encode(*e, ctx);
      ++report.fcg_codes;
      const std::uint64_t mine = fcg(code);
      const std::uint64_t expected = oracle_fcg(code);
      if (mine != expected) {
        ++report.fcg_disagreements;
        report.rows.push_back({"disagreement", "fcg(" + print(*e) + ")", std::to_string(mine),
                               std::to_string(expected), serialize(code)});
      }
    }
  }
  return report;
}

}  // namespace bitsim
