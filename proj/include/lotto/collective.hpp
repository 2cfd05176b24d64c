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

#include "lotto/adversary.hpp"
#include "lotto/game.hpp"

namespace lotto {

// Improvements in U1 + U2 below this multiple of phi1 + phi2 do not count.
inline constexpr double kCollectiveTolerance = 1e-10;

struct CollectiveReport {
  double baseline = 0.0;  // U1 + U2 with no transfer
  double optimum = 0.0;   // best U1 + U2 over any transfer
  Transfer optimal_budget;
  Transfer optimal_contest;
  // The joint optimum is reported as the contest-only optimum.
  Transfer optimal_joint;
  bool improvable = false;
};

// U1 + U2 after transfer t. Throws ValidationError if t is infeasible.
double collective_payoff(const GameInstance& g, const Transfer& t,
                         double eps = kDefaultCaseEps);

// The transfers that equalize x1/phi1 and x2/phi2 using only nu or only tau.
Transfer optimal_contest_transfer(const GameInstance& g);
Transfer optimal_budget_transfer(const GameInstance& g);

// (2S - 1)/(2S) * Phi if S = x1 + x2 >= 1, else Phi * S / 2.
double max_collective_payoff(const GameInstance& g);

bool collectively_beneficial_exists(const GameInstance& g, double eps = kDefaultCaseEps);

CollectiveReport collective_report(const GameInstance& g, double eps = kDefaultCaseEps);

}  // namespace lotto
