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
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bitsim/dl.hpp"
#include "bitsim/encoder.hpp"

namespace bitsim {

/// A finite interpretation over the domain {0, .., domain_size - 1}.
/// Extensions are bit masks; a role pair (d, e) is bit d * domain_size + e.
struct Interpretation {
  int domain_size = 1;
  std::map<std::string, std::uint32_t, std::less<>> concept_ext;
  std::map<std::string, std::uint64_t, std::less<>> role_ext;

  std::uint32_t domain_mask() const { return (std::uint32_t{1} << domain_size) - 1; }
};

std::string describe(const Interpretation& interp);

/// Model-theoretic extension of an expression. Defined names are expanded
/// through the TBox; atomic names missing from the interpretation throw.
std::uint32_t extension(const Concept& expr, const Interpretation& interp, const TBox& tbox);
std::uint64_t role_extension(const RoleExpr& role, const Interpretation& interp);

struct OracleCaps {
  int propositional_atoms = 12;
  int role_names = 4;
  int max_domain = 3;
  int enumeration_bits = 20;  // log2 of the interpretations tried per domain size
};

struct OracleResult {
  enum class Mode { Propositional, Role };

  bool holds = true;
  std::optional<Interpretation> witness;
  Mode mode = Mode::Propositional;
  // Largest domain size that was enumerated completely. Role mode refutes
  // only; a verdict of holds is exact only in propositional mode.
  int domain_checked = 1;
  bool complete = true;  // every domain size up to max_domain was covered
};

/// Does ci denote a subset of cj in every enumerated model of the TBox?
OracleResult oracle_subsumes(const Concept& ci, const Concept& cj, const TBox& tbox,
                             const OracleCaps& caps = {});

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// |models of and(ci,cj)| / |models of or(ci,cj)| over the consistent sign
/// assignments of all TBox atoms; 1 when both are empty.
Rational oracle_jaccard(const Concept& ci, const Concept& cj, const TBox& tbox,
                        const OracleCaps& caps = {});

/// Independent code-generativity count: tests each of the 2^n sign
/// assignments for membership in the code.
std::uint64_t oracle_fcg(const BitCode& code);

/// Bits of the common reflexive ancestors of two atoms, computed from the
/// inclusion graph alone.
BitCode common_ancestor_code(const std::string& a, const std::string& b,
                             const EncodingContext& ctx);

struct CrossCheckRow {
  std::string kind;  // disagreement, unknown, documented-incompleteness, oracle-inconclusive
  std::string inputs;
  std::string encoder;
  std::string oracle;
  std::string witness;
};

struct CrossCheckReport {
  std::vector<CrossCheckRow> rows;
  std::int64_t subsumption_pairs = 0;
  std::int64_t agreements = 0;
  std::int64_t disagreements = 0;
  std::int64_t unknowns = 0;
  std::int64_t documented = 0;
  std::int64_t inconclusive = 0;
  std::int64_t lcs_pairs = 0;
  std::int64_t lcs_disagreements = 0;
  std::int64_t fcg_codes = 0;
  std::int64_t fcg_disagreements = 0;

  bool ok() const { return disagreements == 0 && lcs_disagreements == 0 && fcg_disagreements == 0; }
  void write_tsv(std::ostream& out) const;
};

CrossCheckReport cross_check(const TBox& tbox, int trials, std::uint64_t seed,
                             const OracleCaps& caps = {});

}  // namespace bitsim
