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

#include "lotto/collective.hpp"

namespace lotto {

double collective_payoff(const GameInstance& g, const Transfer& t, double eps) {
  const PlayerPayoffs p = player_payoffs(g, t, eps);
  return p.u1 + p.u2;
}

Transfer optimal_contest_transfer(const GameInstance& g) {
  validate(g);
  return {0.0, (g.x2 * g.phi1 - g.x1 * g.phi2) / (g.x1 + g.x2)};
}

Transfer optimal_budget_transfer(const GameInstance& g) {
  validate(g);
  return {(g.x1 * g.phi2 - g.x2 * g.phi1) / (g.phi1 + g.phi2), 0.0};
}

double max_collective_payoff(const GameInstance& g) {
  validate(g);
  const double s = g.total_budget();
  const double phi = g.total_valuation();
  if (s >= 1.0) return (2.0 * s - 1.0) / (2.0 * s) * phi;
  return 0.5 * phi * s;
}

bool collectively_beneficial_exists(const GameInstance& g, double eps) {
  return max_collective_payoff(g) >
         collective_payoff(g, Transfer{}, eps) + kCollectiveTolerance * g.total_valuation();
}

CollectiveReport collective_report(const GameInstance& g, double eps) {
  CollectiveReport r;
  r.baseline = collective_payoff(g, Transfer{}, eps);
  r.optimum = max_collective_payoff(g);
  r.optimal_budget = optimal_budget_transfer(g);
  r.optimal_contest = optimal_contest_transfer(g);
  r.optimal_joint = r.optimal_contest;
  r.improvable = r.optimum > r.baseline + kCollectiveTolerance * g.total_valuation();
  return r;
}

}  // namespace lotto
