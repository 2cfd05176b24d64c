// Copyright 2026 The Lotto Alliance Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lotto/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lotto {
namespace {

// Case index for a game already known to satisfy x1/phi1 < x2/phi2.
CaseIndex classify_oriented(const GameInstance& g, double eps) {
  // phi2/phi1 <= x1 x2  <=>  x1 x2 phi1 / phi2 >= 1. Equality goes to Case 1.
  const double p = g.x1 * g.x2 * g.phi1 / g.phi2;
  if (p >= 1.0 - eps) return CaseIndex::kCase1;
  const double slack = 1.0 - std::sqrt(p);
  if (slack <= g.x2 * (1.0 + eps)) return CaseIndex::kCase2;
  return CaseIndex::kCase3;
}

AdversaryAllocation oriented_split(const GameInstance& g, CaseIndex index) {
  switch (index) {
    case CaseIndex::kCase1:
      return {1.0, 0.0};
    case CaseIndex::kCase2: {
      const double a = std::min(1.0, std::sqrt(g.x1 * g.x2 * g.phi1 / g.phi2));
      return {a, 1.0 - a};
    }
    case CaseIndex::kCase3: {
      const double s1 = std::sqrt(g.x1 * g.phi1);
      const double s2 = std::sqrt(g.x2 * g.phi2);
      const double a = s1 / (s1 + s2);
      return {a, 1.0 - a};
    }
    case CaseIndex::kCase4: {
      const double s = g.x1 + g.x2;
      return {g.x1 / s, g.x2 / s};
    }
  }
  throw std::logic_error("unreachable case index");
}

// Closed forms with the weak player first: (U_weak, U_strong).
PlayerPayoffs oriented_payoffs(const GameInstance& g, CaseIndex index) {
  switch (index) {
    case CaseIndex::kCase1: {
      const double weak = g.x1 < 1.0 ? g.phi1 * g.x1 / 2.0
                                     : g.phi1 * (1.0 - 1.0 / (2.0 * g.x1));
      return {weak, g.phi2};
    }
    case CaseIndex::kCase2: {
      const double h = 0.5 * std::sqrt(g.x1 * g.phi1 * g.phi2 / g.x2);
      return {h, g.phi2 * (1.0 - 1.0 / (2.0 * g.x2)) + h};
    }
    case CaseIndex::kCase3: {
      const double s = 0.5 * std::sqrt(g.x1 * g.x2 * g.phi1 * g.phi2);
      return {0.5 * g.x1 * g.phi1 + s, 0.5 * g.x2 * g.phi2 + s};
    }
    case CaseIndex::kCase4: {
      const double keep = 1.0 - 1.0 / (2.0 * (g.x1 + g.x2));
      return {g.phi1 * keep, g.phi2 * keep};
    }
  }
  throw std::logic_error("unreachable case index");
}

}  // namespace

std::string to_string(const CaseLabel& label) {
  if (label.index == CaseIndex::kCase4) return "C4";
  std::string out = "C" + std::to_string(static_cast<int>(label.index));
  out += label.orientation == Orientation::kOneGtTwo ? "_1gt2" : "_1le2";
  return out;
}

std::optional<CaseLabel> parse_case_label(std::string_view text) {
  if (text == "C4") return CaseLabel{Orientation::kNeutral, CaseIndex::kCase4};
  if (text.size() != 7 || text[0] != 'C') return std::nullopt;
  const char digit = text[1];
  if (digit < '1' || digit > '3') return std::nullopt;
  const auto index = static_cast<CaseIndex>(digit - '0');
  const std::string_view suffix = text.substr(2);
  if (suffix == "_1le2") return CaseLabel{Orientation::kOneLeqTwo, index};
  if (suffix == "_1gt2") return CaseLabel{Orientation::kOneGtTwo, index};
  return std::nullopt;
}

CaseLabel mirrored(const CaseLabel& label) {
  switch (label.orientation) {
    case Orientation::kOneLeqTwo:
      return {Orientation::kOneGtTwo, label.index};
    case Orientation::kOneGtTwo:
      return {Orientation::kOneLeqTwo, label.index};
    case Orientation::kNeutral:
      return label;
  }
  return label;
}

bool ratios_equal(const GameInstance& g, double eps) {
  const double r1 = g.ratio1();
  const double r2 = g.ratio2();
  return std::abs(r1 - r2) <= eps * std::max(r1, r2);
}

CaseLabel classify_case(const GameInstance& g, double eps) {
  validate(g);
  if (ratios_equal(g, eps)) {
    // Equal ratios: Case 4 if the players jointly match the adversary,
    // otherwise the symmetric interior split of Case 3.
    if (g.total_budget() >= 1.0 - eps) {
      return {Orientation::kNeutral, CaseIndex::kCase4};
    }
    return {Orientation::kOneLeqTwo, CaseIndex::kCase3};
  }
  if (g.ratio1() < g.ratio2()) {
    return {Orientation::kOneLeqTwo, classify_oriented(g, eps)};
  }
  return {Orientation::kOneGtTwo, classify_oriented(swap_indices(g), eps)};
}

AdversaryAllocation best_response(const GameInstance& g, const CaseLabel& label) {
  if (label.orientation == Orientation::kOneGtTwo) {
    const AdversaryAllocation m = oriented_split(swap_indices(g), label.index);
    return {m.xa2, m.xa1};
  }
  return oriented_split(g, label.index);
}

AdversaryAllocation best_response(const GameInstance& g, double eps) {
  return best_response(g, classify_case(g, eps));
}

double adversary_objective(const GameInstance& g, double xa1, double xa2) {
  return one_v_one_payoff(g.phi1, g.x1, xa1).u_adversary +
         one_v_one_payoff(g.phi2, g.x2, xa2).u_adversary;
}

PlayerPayoffs case_payoffs(const GameInstance& g, const CaseLabel& label) {
  if (label.orientation == Orientation::kOneGtTwo) {
    const PlayerPayoffs m = oriented_payoffs(swap_indices(g), label.index);
    return {m.u2, m.u1};
  }
  return oriented_payoffs(g, label.index);
}

PlayerPayoffs payoffs_at_allocation(const GameInstance& g,
                                    const AdversaryAllocation& a) {
  return {one_v_one_payoff(g.phi1, g.x1, a.xa1).u_player,
          one_v_one_payoff(g.phi2, g.x2, a.xa2).u_player};
}

PlayerPayoffs player_payoffs(const GameInstance& g, const Transfer& t, double eps) {
  const GameInstance bar = post_transfer(g, t);
  return case_payoffs(bar, classify_case(bar, eps));
}

}  // namespace lotto
