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

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bitsim {

struct RoleExpr;
struct Concept;
using RolePtr = std::shared_ptr<const RoleExpr>;
using ConceptPtr = std::shared_ptr<const Concept>;

struct RoleExpr {
  enum class Kind { Atomic, Union, Intersection };

  Kind kind = Kind::Atomic;
  std::string name;  // Atomic only
  RolePtr lhs;
  RolePtr rhs;
};

/// ALCH+ concept expression. Nodes are immutable and freely shared.
struct Concept {
  enum class Kind { Atomic, Top, Bottom, Not, And, Or, All, Some };

  Kind kind = Kind::Top;
  std::string name;  // Atomic only
  ConceptPtr lhs;    // Not, And, Or, and the filler of All/Some
  ConceptPtr rhs;    // And, Or
  RolePtr role;      // All, Some
};

RolePtr role_atom(std::string name);
RolePtr role_union(RolePtr a, RolePtr b);
RolePtr role_inter(RolePtr a, RolePtr b);

ConceptPtr atom(std::string name);
ConceptPtr top();
ConceptPtr bot();
ConceptPtr not_(ConceptPtr c);
ConceptPtr and_(ConceptPtr a, ConceptPtr b);
ConceptPtr or_(ConceptPtr a, ConceptPtr b);
ConceptPtr all(RolePtr r, ConceptPtr c);
ConceptPtr some(RolePtr r, ConceptPtr c);

bool equal(const RoleExpr& a, const RoleExpr& b);
bool equal(const Concept& a, const Concept& b);

/// Canonical printer; parse_expr(print(e)) reproduces e.
std::string print(const RoleExpr& r);
std::string print(const Concept& c);

/// Concept and role names referenced anywhere in the expression.
void collect_names(const Concept& c, std::vector<std::string>& concepts,
                   std::vector<std::string>& roles);

bool has_restriction(const Concept& c);

struct TBox {
  std::vector<std::string> concepts;  // declaration order
  std::vector<std::string> roles;
  std::vector<std::pair<std::string, std::string>> concept_inclusions;  // (child, parent)
  std::vector<std::pair<std::string, std::string>> role_inclusions;
  std::vector<std::pair<std::string, ConceptPtr>> definitions;

  bool has_concept(std::string_view name) const;
  bool has_role(std::string_view name) const;
  /// nullptr when name is not a defined concept.
  ConceptPtr definition(std::string_view name) const;

  /// Replaces every defined name by its definition, recursively.
  ConceptPtr expand(const ConceptPtr& c) const;
  /// Throws UndeclaredName for any name the TBox does not know.
  void check_names(const Concept& c) const;
};

/// Parses one expression of the prefix grammar. Names are not resolved.
ConceptPtr parse_expr(std::string_view text);

/// Parses a role expression (name, runion, rinter).
RolePtr parse_role(std::string_view text);

/// Parses and validates a TBox; rejects cycles, undeclared names and
/// duplicate definitions.
TBox parse_tbox(std::string_view text);

/// Writes a TBox back in the line format accepted by parse_tbox.
std::string print_tbox(const TBox& tbox);

/// Structural checks shared by parse_tbox and programmatic construction.
void validate(const TBox& tbox);

}  // namespace bitsim
