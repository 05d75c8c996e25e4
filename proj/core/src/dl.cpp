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

#include "bitsim/dl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "bitsim/error.hpp"

namespace bitsim {

RolePtr role_atom(std::string name) {
  auto r = std::make_shared<RoleExpr>();
  r->name = std::move(name);
  return r;
}

RolePtr role_union(RolePtr a, RolePtr b) {
  auto r = std::make_shared<RoleExpr>();
  r->kind = RoleExpr::Kind::Union;
  r->lhs = std::move(a);
  r->rhs = std::move(b);
  return r;
}

RolePtr role_inter(RolePtr a, RolePtr b) {
  auto r = std::make_shared<RoleExpr>();
  r->kind = RoleExpr::Kind::Intersection;
  r->lhs = std::move(a);
  r->rhs = std::move(b);
  return r;
}

namespace {

ConceptPtr make(Concept::Kind kind, ConceptPtr lhs = nullptr, ConceptPtr rhs = nullptr,
                RolePtr role = nullptr) {
  auto c = std::make_shared<Concept>();
  c->kind = kind;
  c->lhs = std::move(lhs);
  c->rhs = std::move(rhs);
  c->role = std::move(role);
  return c;
}

}  // namespace

ConceptPtr atom(std::string name) {
  auto c = std::make_shared<Concept>();
  c->kind = Concept::Kind::Atomic;
  c->name = std::move(name);
  return c;
}

ConceptPtr top() { return make(Concept::Kind::Top); }
ConceptPtr bot() { return make(Concept::Kind::Bottom); }
ConceptPtr not_(ConceptPtr c) { return make(Concept::Kind::Not, std::move(c)); }
ConceptPtr and_(ConceptPtr a, ConceptPtr b) {
  return make(Concept::Kind::And, std::move(a), std::move(b));
}
ConceptPtr or_(ConceptPtr a, ConceptPtr b) {
  return make(Concept::Kind::Or, std::move(a), std::move(b));
}
ConceptPtr all(RolePtr r, ConceptPtr c) {
  return make(Concept::Kind::All, std::move(c), nullptr, std::move(r));
}
ConceptPtr some(RolePtr r, ConceptPtr c) {
  return make(Concept::Kind::Some, std::move(c), nullptr, std::move(r));
}

bool equal(const RoleExpr& a, const RoleExpr& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == RoleExpr::Kind::Atomic) return a.name == b.name;
  return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
}

bool equal(const Concept& a, const Concept& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Concept::Kind::Atomic: return a.name == b.name;
    case Concept::Kind::Top:
    case Concept::Kind::Bottom: return true;
    case Concept::Kind::Not: return equal(*a.lhs, *b.lhs);
    case Concept::Kind::And:
    case Concept::Kind::Or: return equal(*a.lhs, *b.lhs) && equal(*a.rhs, *b.rhs);
    case Concept::Kind::All:
    case Concept::Kind::Some: return equal(*a.role, *b.role) && equal(*a.lhs, *b.lhs);
  }
  return false;
}

std::string print(const RoleExpr& r) {
  switch (r.kind) {
    case RoleExpr::Kind::Atomic: return r.name;
    case RoleExpr::Kind::Union: return "runion(" + print(*r.lhs) + ", " + print(*r.rhs) + ")";
    case RoleExpr::Kind::Intersection:
      return "rinter(" + print(*r.lhs) + ", " + print(*r.rhs) + ")";
  }
  return {};
}

std::string print(const Concept& c) {
  switch (c.kind) {
    case Concept::Kind::Atomic: return c.name;
    case Concept::Kind::Top: return "top";
    case Concept::Kind::Bottom: return "bot";
    case Concept::Kind::Not: return "not(" + print(*c.lhs) + ")";
    case Concept::Kind::And: return "and(" + print(*c.lhs) + ", " + print(*c.rhs) + ")";
    case Concept::Kind::Or: return "or(" + print(*c.lhs) + ", " + print(*c.rhs) + ")";
    case Concept::Kind::All: return "all(" + print(*c.role) + ", " + print(*c.lhs) + ")";
    case Concept::Kind::Some: return "some(" + print(*c.role) + ", " + print(*c.lhs) + ")";
  }
  return {};
}

namespace {

void collect_roles(const RoleExpr& r, std::vector<std::string>& roles) {
  if (r.kind == RoleExpr::Kind::Atomic) {
    if (std::find(roles.begin(), roles.end(), r.name) == roles.end()) roles.push_back(r.name);
    return;
  }
  collect_roles(*r.lhs, roles);
  collect_roles(*r.rhs, roles);
}

}  // namespace

void collect_names(const Concept& c, std::vector<std::string>& concepts,
                   std::vector<std::string>& roles) {
  switch (c.kind) {
    case Concept::Kind::Atomic:
      if (std::find(concepts.begin(), concepts.end(), c.name) == concepts.end()) {
        concepts.push_back(c.name);
      }
      return;
    case Concept::Kind::Top:
    case Concept::Kind::Bottom: return;
    case Concept::Kind::Not: collect_names(*c.lhs, concepts, roles); return;
    case Concept::Kind::And:
    case Concept::Kind::Or:
      collect_names(*c.lhs, concepts, roles);
      collect_names(*c.rhs, concepts, roles);
      return;
    case Concept::Kind::All:
    case Concept::Kind::Some:
      collect_roles(*c.role, roles);
      collect_names(*c.lhs, concepts, roles);
      return;
  }
}

bool has_restriction(const Concept& c) {
  switch (c.kind) {
    case Concept::Kind::All:
    case Concept::Kind::Some: return true;
    case Concept::Kind::Not: return has_restriction(*c.lhs);
    case Concept::Kind::And:
    case Concept::Kind::Or: return has_restriction(*c.lhs) || has_restriction(*c.rhs);
    default: return false;
  }
}

bool TBox::has_concept(std::string_view name) const {
  return std::find(concepts.begin(), concepts.end(), name) != concepts.end();
}

bool TBox::has_role(std::string_view name) const {
  return std::find(roles.begin(), roles.end(), name) != roles.end();
}

ConceptPtr TBox::definition(std::string_view name) const {
  for (const auto& [n, expr] : definitions) {
    if (n == name) return expr;
  }
  return nullptr;
}

ConceptPtr TBox::expand(const ConceptPtr& c) const {
  switch (c->kind) {
    case Concept::Kind::Atomic: {
      if (auto d = definition(c->name)) return expand(d);
      return c;
    }
    case Concept::Kind::Top:
    case Concept::Kind::Bottom: return c;
    case Concept::Kind::Not: return not_(expand(c->lhs));
    case Concept::Kind::And: return and_(expand(c->lhs), expand(c->rhs));
    case Concept::Kind::Or: return or_(expand(c->lhs), expand(c->rhs));
    case Concept::Kind::All: return all(c->role, expand(c->lhs));
    case Concept::Kind::Some: return some(c->role, expand(c->lhs));
  }
  return c;
}

void TBox::check_names(const Concept& c) const {
  std::vector<std::string> cs, rs;
  collect_names(c, cs, rs);
  for (const auto& n : cs) {
    if (!has_concept(n) && !definition(n)) throw UndeclaredName(n);
  }
  for (const auto& n : rs) {
    if (!has_role(n)) throw UndeclaredName(n);
  }
}

namespace {

constexpr int kMaxDepth = 256;

bool is_keyword(std::string_view s) {
  static const std::set<std::string_view> kKeywords = {
      "top", "bot", "and", "or", "not", "all", "some", "runion", "rinter"};
  return kKeywords.count(s) > 0;
}

bool is_ident_start(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); }
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9') || c == '_'; }

bool valid_name(std::string_view s) {
  if (s.empty() || !is_ident_start(s[0])) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

class ExprParser {
 public:
  ExprParser(std::string_view text, int line, int column)
      : text_(text), base_line_(line), base_column_(column) {}

  ConceptPtr parse_whole_concept() {
    auto c = concept_expr();
    expect_end();
    return c;
  }

  RolePtr parse_whole_role() {
    auto r = role_expr();
    expect_end();
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    int line = base_line_;
    int column = base_column_;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size()) fail(std::string("expected '") + c + "', found end of input", pos_);
    if (text_[pos_] != c) {
      fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'", pos_);
    }
    ++pos_;
  }

  void expect_end() {
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected trailing input", pos_);
  }

  std::string identifier() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected expression, found end of input", pos_);
    if (!is_ident_start(text_[pos_])) {
      fail(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  struct DepthGuard {
    DepthGuard(ExprParser& p, std::size_t at) : parser(p) {
      if (++parser.depth_ > kMaxDepth) parser.fail("expression nested too deeply", at);
    }
    ~DepthGuard() { --parser.depth_; }
    ExprParser& parser;
  };

  ConceptPtr concept_expr() {
    skip_ws();
    const std::size_t at = pos_;
    DepthGuard guard(*this, at);
    const std::string id = identifier();
    if (id == "top") return top();
    if (id == "bot") return bot();
    if (id == "not") {
      expect('(');
      auto c = concept_expr();
      expect(')');
      return not_(c);
    }
    if (id == "and" || id == "or") {
      expect('(');
      auto a = concept_expr();
      expect(',');
      auto b = concept_expr();
      expect(')');
      return id == "and" ? and_(a, b) : or_(a, b);
    }
    if (id == "all" || id == "some") {
      expect('(');
      auto r = role_expr();
      expect(',');
      auto c = concept_expr();
      expect(')');
      return id == "all" ? all(r, c) : some(r, c);
    }
    if (id == "runion" || id == "rinter") fail("role constructor '" + id + "' used as a concept", at);
    if (peek('(')) fail("unknown function name '" + id + "'", at);
    return atom(id);
  }

  RolePtr role_expr() {
    skip_ws();
    const std::size_t at = pos_;
    DepthGuard guard(*this, at);
    const std::string id = identifier();
    if (id == "runion" || id == "rinter") {
      expect('(');
      auto a = role_expr();
      expect(',');
      auto b = role_expr();
      expect(')');
      return id == "runion" ? role_union(a, b) : role_inter(a, b);
    }
    if (is_keyword(id)) fail("concept constructor '" + id + "' used as a role", at);
    if (peek('(')) fail("unknown function name '" + id + "'", at);
    return role_atom(id);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int base_line_;
  int base_column_;
  int depth_ = 0;
};

std::vector<std::pair<std::string_view, std::size_t>> split_words(std::string_view line) {
  std::vector<std::pair<std::string_view, std::size_t>> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    words.emplace_back(line.substr(start, i - start), start);
  }
  return words;
}

void add_unique(std::vector<std::string>& v, std::string_view name) {
  if (std::find(v.begin(), v.end(), name) == v.end()) v.emplace_back(name);
}

void check_acyclic(const std::vector<std::string>& nodes,
                   const std::vector<std::pair<std::string, std::string>>& edges,
                   const std::string& what) {
  std::map<std::string, std::vector<std::string>> parents;
  for (const auto& [child, parent] : edges) parents[child].push_back(parent);
  std::map<std::string, int> state;  // 0 new, 1 on stack, 2 done
  std::function<void(const std::string&)> visit = [&](const std::string& n) {
    state[n] = 1;
    for (const auto& p : parents[n]) {
      if (state[p] == 1) throw CycleError("cycle in " + what + ": " + p);
      if (state[p] == 0) visit(p);
    }
    state[n] = 2;
  };
  for (const auto& n : nodes) {
    if (state[n] == 0) visit(n);
  }
}

}  // namespace

ConceptPtr parse_expr(std::string_view text) {
  return ExprParser(text, 1, 1).parse_whole_concept();
}

RolePtr parse_role(std::string_view text) { return ExprParser(text, 1, 1).parse_whole_role(); }

void validate(const TBox& tbox) {
  for (const auto& [child, parent] : tbox.concept_inclusions) {
    if (!tbox.has_concept(child)) throw UndeclaredName(child);
    if (!tbox.has_concept(parent)) throw UndeclaredName(parent);
  }
  for (const auto& [child, parent] : tbox.role_inclusions) {
    if (!tbox.has_role(child)) throw UndeclaredName(child);
    if (!tbox.has_role(parent)) throw UndeclaredName(parent);
  }
  check_acyclic(tbox.concepts, tbox.concept_inclusions, "concept hierarchy");
  check_acyclic(tbox.roles, tbox.role_inclusions, "role hierarchy");

  std::set<std::string> defined;
  for (const auto& [name, expr] : tbox.definitions) {
    if (!defined.insert(name).second) throw Error("duplicate definition: " + name);
    if (tbox.has_concept(name)) throw Error("name is both atomic and defined: " + name);
  }
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> uses;
  for (const auto& [name, expr] : tbox.definitions) {
    tbox.check_names(*expr);
    names.push_back(name);
    std::vector<std::string> cs, rs;
    collect_names(*expr, cs, rs);
    for (const auto& c : cs) {
      if (defined.count(c)) uses.emplace_back(name, c);
    }
  }
  check_acyclic(names, uses, "definitions");
}

TBox parse_tbox(std::string_view text) {
  TBox tbox;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    const auto words = split_words(line);
    auto fail = [&](const std::string& message, std::size_t column) -> void {
      throw ParseError(message, line_no, static_cast<int>(column) + 1);
    };
    auto name_at = [&](std::size_t i) {
      const auto [w, col] = words[i];
      if (!valid_name(w)) fail("invalid name '" + std::string(w) + "'", col);
      if (is_keyword(w)) fail("reserved word '" + std::string(w) + "' used as a name", col);
      return w;
    };

    if (words.empty()) {
      // blank or comment-only line
    } else if (words[0].first == "define") {
      const std::size_t eq = line.find('=');
      if (eq == std::string_view::npos) fail("expected '=' in definition", line.size());
      const auto head = split_words(line.substr(0, eq));
      if (head.size() != 2) fail("expected 'define <name> = <expr>'", words[0].second);
      if (!valid_name(head[1].first) || is_keyword(head[1].first)) {
        fail("invalid name '" + std::string(head[1].first) + "'", head[1].second);
      }
      auto expr = ExprParser(line.substr(eq + 1), line_no, static_cast<int>(eq) + 2)
                      .parse_whole_concept();
      tbox.definitions.emplace_back(std::string(head[1].first), expr);
    } else if (words[0].first == "concept" && words.size() == 2) {
      add_unique(tbox.concepts, name_at(1));
    } else if (words[0].first == "role" && words.size() == 2) {
      add_unique(tbox.roles, name_at(1));
    } else if (words[0].first == "role" && words.size() == 4 && words[2].first == "sub") {
      auto child = name_at(1);
      auto parent = name_at(3);
      add_unique(tbox.roles, child);
      add_unique(tbox.roles, parent);
      tbox.role_inclusions.emplace_back(std::string(child), std::string(parent));
    } else if (words.size() == 3 && words[1].first == "sub") {
      auto child = name_at(0);
      auto parent = name_at(2);
      add_unique(tbox.concepts, child);
      add_unique(tbox.concepts, parent);
      tbox.concept_inclusions.emplace_back(std::string(child), std::string(parent));
    } else {
      fail("unrecognized statement", words[0].second);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  validate(tbox);
  return tbox;
}

std::string print_tbox(const TBox& tbox) {
  std::ostringstream out;
  for (const auto& c : tbox.concepts) out << "concept " << c << "\n";
  for (const auto& r : tbox.roles) out << "role " << r << "\n";
  for (const auto& [c, p] : tbox.concept_inclusions) out << c << " sub " << p << "\n";
  for (const auto& [c, p] : tbox.role_inclusions) out << "role " << c << " sub " << p << "\n";
  for (const auto& [n, e] : tbox.definitions) out << "define " << n << " = " << print(*e) << "\n";
  return out.str();
}

}  // namespace bitsim
