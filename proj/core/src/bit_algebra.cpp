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

#include "bitsim/bit_algebra.hpp"

#include <deque>
#include <functional>
#include <stdexcept>

namespace bitsim {
namespace {

constexpr std::array<char, kBitCount> kChars = {'0', '1', 'X', 'x', 'N', 'Y',
                                                'y', 't', 'f', 'T', 'F'};

// The nine non-extreme symbols split into a positive family (Y' < 1 < X), a
// negative family (Y < X'' < X'), the neutral 0 and the near-extremes.
enum class Family { Positive, Negative, Neutral, Other };

struct Placement {
  Family family;
  int level;  // 1..3 inside a family
};

Placement place(Bit b) {
  switch (b) {
    case Bit::YPrime: return {Family::Positive, 1};
    case Bit::One: return {Family::Positive, 2};
    case Bit::X: return {Family::Positive, 3};
    case Bit::Y: return {Family::Negative, 1};
    case Bit::XDoublePrime: return {Family::Negative, 2};
    case Bit::XPrime: return {Family::Negative, 3};
    case Bit::Zero: return {Family::Neutral, 0};
    default: return {Family::Other, 0};
  }
}

Bit member(Family f, int level) {
  static constexpr std::array<Bit, 3> kPositive = {Bit::YPrime, Bit::One, Bit::X};
  static constexpr std::array<Bit, 3> kNegative = {Bit::Y, Bit::XDoublePrime,
                                                   Bit::XPrime};
  return f == Family::Positive ? kPositive[level - 1] : kNegative[level - 1];
}

Bit canonical_neg(Bit b) {
  switch (b) {
    case Bit::Zero: return Bit::Zero;
    case Bit::One: return Bit::XDoublePrime;
    case Bit::XDoublePrime: return Bit::One;
    case Bit::X: return Bit::Y;
    case Bit::Y: return Bit::X;
    case Bit::XPrime: return Bit::YPrime;
    case Bit::YPrime: return Bit::XPrime;
    case Bit::TopPrime: return Bit::BotPrime;
    case Bit::BotPrime: return Bit::TopPrime;
    case Bit::Top: return Bit::Bot;
    case Bit::Bot: return Bit::Top;
  }
  return b;
}

Bit canonical_join(Bit a, Bit b) {
  if (a == Bit::Top || b == Bit::Top) return Bit::Top;
  if (a == Bit::Bot) return b;
  if (b == Bit::Bot) return a;
  if (a == Bit::TopPrime || b == Bit::TopPrime) return Bit::TopPrime;
  if (a == Bit::BotPrime) return b;
  if (b == Bit::BotPrime) return a;
  const Placement pa = place(a);
  const Placement pb = place(b);
  if (pa.family == Family::Neutral && pb.family == Family::Neutral) return Bit::Zero;
  if (pa.family == Family::Neutral) return member(pb.family, 3);
  if (pb.family == Family::Neutral) return member(pa.family, 3);
  if (pa.family == pb.family) return member(pa.family, std::max(pa.level, pb.level));
  return Bit::TopPrime;
}

std::string pair_text(Bit a, Bit b) { return "(" + bit_name(a) + ", " + bit_name(b) + ")"; }

}  // namespace

char to_char(Bit b) { return kChars[index_of(b)]; }

std::optional<Bit> bit_from_char(char c) {
  for (Bit b : kAllBits) {
    if (to_char(b) == c) return b;
  }
  return std::nullopt;
}

std::string bit_name(Bit b) {
  switch (b) {
    case Bit::Zero: return "0";
    case Bit::One: return "1";
    case Bit::X: return "X";
    case Bit::XPrime: return "X'";
    case Bit::XDoublePrime: return "X''";
    case Bit::Y: return "Y";
    case Bit::YPrime: return "Y'";
    case Bit::TopPrime: return "T'";
    case Bit::BotPrime: return "F'";
    case Bit::Top: return "T";
    case Bit::Bot: return "F";
  }
  return "?";
}

Quantifier negate(Quantifier q) {
  switch (q) {
    case Quantifier::Forall: return Quantifier::Exists;
    case Quantifier::Exists: return Quantifier::Forall;
    case Quantifier::X: return Quantifier::YPrime;
    case Quantifier::YPrime: return Quantifier::X;
  }
  return q;
}

char to_char(Quantifier q) {
  switch (q) {
    case Quantifier::Forall: return 'A';
    case Quantifier::Exists: return 'E';
    case Quantifier::X: return 'X';
    case Quantifier::YPrime: return 'y';
  }
  return '?';
}

std::optional<Quantifier> quantifier_from_char(char c) {
  switch (c) {
    case 'A': return Quantifier::Forall;
    case 'E': return Quantifier::Exists;
    case 'X': return Quantifier::X;
    case 'y': return Quantifier::YPrime;
    default: return std::nullopt;
  }
}

Bit to_bit(RoleBit r) {
  switch (r) {
    case RoleBit::One: return Bit::One;
    case RoleBit::Zero: return Bit::Zero;
    case RoleBit::X: return Bit::X;
    case RoleBit::YPrime: return Bit::YPrime;
  }
  return Bit::Zero;
}

std::optional<RoleBit> role_bit_from(Bit b) {
  switch (b) {
    case Bit::One: return RoleBit::One;
    case Bit::Zero: return RoleBit::Zero;
    case Bit::X: return RoleBit::X;
    case Bit::YPrime: return RoleBit::YPrime;
    default: return std::nullopt;
  }
}

RoleBit join(RoleBit a, RoleBit b) {
  // The role alphabet is closed under join; verify_tables checks this.
  return *role_bit_from(join(to_bit(a), to_bit(b)));
}

RoleBit meet(RoleBit a, RoleBit b) { return *role_bit_from(meet(to_bit(a), to_bit(b))); }

char to_char(RoleBit r) { return to_char(to_bit(r)); }

std::optional<RoleBit> role_bit_from_char(char c) {
  auto b = bit_from_char(c);
  if (!b) return std::nullopt;
  return role_bit_from(*b);
}

const std::vector<std::pair<Bit, Bit>>& hasse_edges() {
  static const std::vector<std::pair<Bit, Bit>> kEdges = {
      {Bit::Bot, Bit::BotPrime},     {Bit::BotPrime, Bit::YPrime},
      {Bit::BotPrime, Bit::Y},       {Bit::YPrime, Bit::One},
      {Bit::Y, Bit::XDoublePrime},   {Bit::Y, Bit::Zero},
      {Bit::One, Bit::Zero},         {Bit::Zero, Bit::X},
      {Bit::Zero, Bit::XPrime},      {Bit::XDoublePrime, Bit::XPrime},
      {Bit::X, Bit::TopPrime},       {Bit::XPrime, Bit::TopPrime},
      {Bit::TopPrime, Bit::Top},
  };
  return kEdges;
}

AlgebraTables build_canonical_tables() {
  AlgebraTables t;
  for (Bit a : kAllBits) {
    t.neg[index_of(a)] = canonical_neg(a);
    for (Bit b : kAllBits) t.join[index_of(a)][index_of(b)] = canonical_join(a, b);
  }
  // Meet has no freedom of its own: it is the De Morgan dual of join.
  for (Bit a : kAllBits) {
    for (Bit b : kAllBits) {
      t.meet[index_of(a)][index_of(b)] =
          canonical_neg(canonical_join(canonical_neg(a), canonical_neg(b)));
    }
  }

  for (int i = 0; i < kBitCount; ++i) t.leq[i][i] = true;
  for (auto [lo, hi] : hasse_edges()) t.leq[index_of(lo)][index_of(hi)] = true;
  for (int k = 0; k < kBitCount; ++k) {
    for (int i = 0; i < kBitCount; ++i) {
      for (int j = 0; j < kBitCount; ++j) {
        if (t.leq[i][k] && t.leq[k][j]) t.leq[i][j] = true;
      }
    }
  }

  std::array<std::vector<int>, kBitCount> adjacent;
  for (auto [lo, hi] : hasse_edges()) {
    adjacent[index_of(lo)].push_back(index_of(hi));
    adjacent[index_of(hi)].push_back(index_of(lo));
  }
  for (int src = 0; src < kBitCount; ++src) {
    std::array<int, kBitCount> dist;
    dist.fill(-1);
    dist[src] = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adjacent[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    }
    t.hasse_dist[src] = dist;
  }
  return t;
}

const AlgebraTables& tables() {
  static const AlgebraTables kTables = build_canonical_tables();
  return kTables;
}

bool ConstraintReport::all_passed() const {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

std::vector<std::string> ConstraintReport::failed_names() const {
  std::vector<std::string> names;
  for (const auto& r : results) {
    if (!r.passed) names.push_back(r.name);
  }
  return names;
}

ConstraintReport verify_tables(const AlgebraTables& t) {
  ConstraintReport report;
  auto J = [&](Bit a, Bit b) { return t.join[index_of(a)][index_of(b)]; };
  auto M = [&](Bit a, Bit b) { return t.meet[index_of(a)][index_of(b)]; };
  auto N = [&](Bit a) { return t.neg[index_of(a)]; };
  auto L = [&](Bit a, Bit b) { return t.leq[index_of(a)][index_of(b)]; };

  auto identity = [&](const std::string& name, Bit got, Bit want) {
    ConstraintResult r{name, got == want, ""};
    if (!r.passed) r.counterexample = "got " + bit_name(got) + ", want " + bit_name(want);
    report.results.push_back(std::move(r));
  };
  auto for_all_pairs = [&](const std::string& name,
                           const std::function<bool(Bit, Bit)>& law) {
    ConstraintResult r{name, true, ""};
    for (Bit a : kAllBits) {
      for (Bit b : kAllBits) {
        if (!law(a, b)) {
          r.passed = false;
          r.counterexample = pair_text(a, b);
          report.results.push_back(std::move(r));
          return;
        }
      }
    }
    report.results.push_back(std::move(r));
  };
  auto for_all = [&](const std::string& name, const std::function<bool(Bit)>& law) {
    ConstraintResult r{name, true, ""};
    for (Bit a : kAllBits) {
      if (!law(a)) {
        if (r.passed) {
          r.counterexample = bit_name(a);
        } else {
          r.counterexample += ", " + bit_name(a);
        }
        r.passed = false;
      }
    }
    report.results.push_back(std::move(r));
  };

  // Generator identities of the derived alphabet.
  identity("generator X = 1 join 0", J(Bit::One, Bit::Zero), Bit::X);
  identity("generator X' = X'' join 0", J(Bit::XDoublePrime, Bit::Zero), Bit::XPrime);
  identity("generator T' = Y join Y'", J(Bit::Y, Bit::YPrime), Bit::TopPrime);
  identity("generator Y' = 1 meet 0", M(Bit::One, Bit::Zero), Bit::YPrime);
  identity("generator Y = X'' meet 0", M(Bit::XDoublePrime, Bit::Zero), Bit::Y);
  identity("generator F' = X meet X'", M(Bit::X, Bit::XPrime), Bit::BotPrime);
  identity("generator X'' = not 1", N(Bit::One), Bit::XDoublePrime);
  identity("potential bit fixed by negation", N(Bit::Zero), Bit::Zero);

  identity("negation X = not Y", N(Bit::Y), Bit::X);
  identity("negation X' = not Y'", N(Bit::YPrime), Bit::XPrime);
  identity("negation T' = not F'", N(Bit::BotPrime), Bit::TopPrime);
  identity("negation T = not F", N(Bit::Bot), Bit::Top);

  for_all_pairs("join commutative", [&](Bit a, Bit b) { return J(a, b) == J(b, a); });
  for_all_pairs("meet commutative", [&](Bit a, Bit b) { return M(a, b) == M(b, a); });
  for_all("join idempotent", [&](Bit a) { return J(a, a) == a; });
  for_all("meet idempotent", [&](Bit a) { return M(a, a) == a; });
  for_all("double negation", [&](Bit a) { return N(N(a)) == a; });
  for_all_pairs("De Morgan", [&](Bit a, Bit b) { return M(a, b) == N(J(N(a), N(b))); });
  for_all("complement meet is never bottom",
          [&](Bit a) { return M(a, N(a)) != Bit::Bot; });

  for_all("order reflexive", [&](Bit a) { return L(a, a); });
  for_all_pairs("order antisymmetric",
                [&](Bit a, Bit b) { return a == b || !(L(a, b) && L(b, a)); });
  {
    ConstraintResult r{"order transitive", true, ""};
    for (Bit a : kAllBits) {
      for (Bit b : kAllBits) {
        for (Bit c : kAllBits) {
          if (r.passed && L(a, b) && L(b, c) && !L(a, c)) {
            r.passed = false;
            r.counterexample = bit_name(a) + " <= " + bit_name(b) + " <= " + bit_name(c);
          }
        }
      }
    }
    report.results.push_back(std::move(r));
  }
  for_all_pairs("join is an upper bound",
                [&](Bit a, Bit b) { return L(a, J(a, b)) && L(b, J(a, b)); });
  for_all_pairs("meet is a lower bound",
                [&](Bit a, Bit b) { return L(M(a, b), a) && L(M(a, b), b); });

  for_all("top absorbs join", [&](Bit a) { return J(Bit::Top, a) == Bit::Top; });
  for_all("top is meet identity", [&](Bit a) { return M(Bit::Top, a) == a; });
  for_all("bottom is join identity", [&](Bit a) { return J(Bit::Bot, a) == a; });
  for_all("bottom absorbs meet", [&](Bit a) { return M(Bit::Bot, a) == Bit::Bot; });

  {
    constexpr std::array<Bit, 4> kRole = {Bit::One, Bit::Zero, Bit::X, Bit::YPrime};
    ConstraintResult r{"role alphabet closed", true, ""};
    for (Bit a : kRole) {
      for (Bit b : kRole) {
        if (r.passed && (!role_bit_from(J(a, b)) || !role_bit_from(M(a, b)))) {
          r.passed = false;
          r.counterexample = pair_text(a, b);
        }
      }
    }
    report.results.push_back(std::move(r));
  }
  {
    ConstraintResult r{"quantifier negation", true, ""};
    r.passed = negate(Quantifier::Forall) == Quantifier::Exists &&
               negate(Quantifier::Exists) == Quantifier::Forall &&
               negate(Quantifier::YPrime) == Quantifier::X &&
               negate(Quantifier::X) == Quantifier::YPrime;
    if (!r.passed) r.counterexample = "quantifier negation table";
    report.results.push_back(std::move(r));
  }
  for_all_pairs("Hasse distance symmetric and connected", [&](Bit a, Bit b) {
    const int d = t.hasse_dist[index_of(a)][index_of(b)];
    return d >= 0 && d == t.hasse_dist[index_of(b)][index_of(a)] && ((d == 0) == (a == b));
  });
  return report;
}

}  // namespace bitsim
