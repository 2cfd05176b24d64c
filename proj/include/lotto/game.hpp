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

#include <stdexcept>
#include <string>

namespace lotto {

// Raised for malformed games, infeasible transfers and other invalid input.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A Coalitional General Lotto instance. The adversary budget is normalized
// to 1, so x1 and x2 are measured in units of the adversary budget.
struct GameInstance {
  double phi1 = 0.0;  // cumulative contest valuation of game 1
  double phi2 = 0.0;  // cumulative contest valuation of game 2
  double x1 = 0.0;    // Player 1 budget
  double x2 = 0.0;    // Player 2 budget

  double total_valuation() const { return phi1 + phi2; }
  double total_budget() const { return x1 + x2; }
  // Budget-to-valuation ratios; the smaller one marks the weaker player.
  double ratio1() const { return x1 / phi1; }
  double ratio2() const { return x2 / phi2; }

  friend bool operator==(const GameInstance&, const GameInstance&) = default;
};

// Budget (tau) and contest valuation (nu) moved from Player 1 to Player 2.
// Negative values move resources the other way.
struct Transfer {
  double tau = 0.0;
  double nu = 0.0;

  friend bool operator==(const Transfer&, const Transfer&) = default;
};

struct PayoffPair {
  double u_player = 0.0;
  double u_adversary = 0.0;
};

// Absolute slack used by feasibility checks so that a transfer which
// numerically zeroes a parameter is rejected.
inline constexpr double kFeasibilitySlack = 1e-12;

// Throws ValidationError unless all four parameters are finite and > 0.
void validate(const GameInstance& g);

bool is_feasible(const GameInstance& g, const Transfer& t);

// Equilibrium payoffs of a one-vs-one General Lotto game.
//
// u_player = phi * x_player / (2 x_adv)        when x_player <= x_adv
//          = phi * (1 - x_adv / (2 x_player))  otherwise
//
// Zero budgets take the continuous limits; when both are zero the tie goes
// to the player, matching the weak-inequality win indicator.
PayoffPair one_v_one_payoff(double phi, double x_player, double x_adv);

// The game induced by transfer t. Throws if t is infeasible for g.
GameInstance post_transfer(const GameInstance& g, const Transfer& t);

// (phi2, phi1, x2, x1). Involutive.
constexpr GameInstance swap_indices(const GameInstance& g) {
  return GameInstance{g.phi2, g.phi1, g.x2, g.x1};
}

std::string to_string(const GameInstance& g);

}  // namespace lotto
