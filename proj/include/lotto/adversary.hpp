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

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lotto/game.hpp"

namespace lotto {

// Which player has the weaker budget-to-valuation ratio. Case 4 (equal
// ratios) carries the neutral orientation.
enum class Orientation { kOneLeqTwo, kOneGtTwo, kNeutral };

enum class CaseIndex { kCase1 = 1, kCase2 = 2, kCase3 = 3, kCase4 = 4 };

// Structural form of the adversary's best response.
//   Case 1: whole budget on the weaker player's game.
//   Case 2: interior split, the stronger player's game stays in the
//           linear (player-ahead) regime.
//   Case 3: interior split, adversary outspends both players.
//   Case 4: equal ratios with x1 + x2 >= 1; adversary is indifferent.
struct CaseLabel {
  Orientation orientation = Orientation::kNeutral;
  CaseIndex index = CaseIndex::kCase4;

  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

// "C1_1le2", "C2_1gt2", ..., "C4".
std::string to_string(const CaseLabel& label);
std::optional<CaseLabel> parse_case_label(std::string_view text);

// Mirror image of a label under swap_indices.
CaseLabel mirrored(const CaseLabel& label);

struct AdversaryAllocation {
  double xa1 = 0.0;
  double xa2 = 0.0;
};

inline constexpr double kDefaultCaseEps = 1e-9;

// Ratio equality within eps relative to the larger ratio.
bool ratios_equal(const GameInstance& g, double eps = kDefaultCaseEps);

CaseLabel classify_case(const GameInstance& g, double eps = kDefaultCaseEps);

// Closed-form solution of the adversary's budget-splitting problem. Case 4
// uses the proportional split xa_i = x_i / (x1 + x2).
AdversaryAllocation best_response(const GameInstance& g,
                                  double eps = kDefaultCaseEps);
AdversaryAllocation best_response(const GameInstance& g, const CaseLabel& label);

// Adversary's total equilibrium payoff for the split (xa1, xa2).
double adversary_objective(const GameInstance& g, double xa1, double xa2);

struct PlayerPayoffs {
  double u1 = 0.0;
  double u2 = 0.0;
};

// Player payoffs in game g (already post-transfer) evaluated from the
// per-case closed forms.
PlayerPayoffs case_payoffs(const GameInstance& g, const CaseLabel& label);

// Player payoffs for an explicit adversary split, straight from the
// one-vs-one equilibrium formula.
PlayerPayoffs payoffs_at_allocation(const GameInstance& g,
                                    const AdversaryAllocation& a);

// U1(tau, nu | g), U2(tau, nu | g). Throws on an infeasible transfer.
PlayerPayoffs player_payoffs(const GameInstance& g, const Transfer& t,
                             double eps = kDefaultCaseEps);

}  // namespace lotto
