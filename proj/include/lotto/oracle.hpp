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
#include "lotto/mutual.hpp"

namespace lotto {

// Brute-force counterparts of the closed forms, used as ground truth.

struct GridSpec {
  int resolution = 4001;  // points per axis
  double margin = 1e-6;   // relative inset from open-interval endpoints

  static GridSpec one_dimensional() { return {4001, 1e-6}; }
  static GridSpec two_dimensional() { return {401, 1e-6}; }
};

// Throws ValidationError unless resolution >= 3 and 0 < margin < 0.5.
void validate(const GridSpec& spec);

// Maximizes the adversary objective over xa1 in [0, 1] (xa2 = 1 - xa1).
AdversaryAllocation grid_best_response(const GameInstance& g_bar,
                                       const GridSpec& spec = GridSpec::one_dimensional());

// Scans the mechanism's feasible transfers for a mutually improving one.
// The witness is the best grid point after local refinement.
MutualBenefitVerdict grid_mutual_search(const GameInstance& g, Mechanism mechanism,
                                        const GridSpec& spec);
MutualBenefitVerdict grid_mutual_search(const GameInstance& g, Mechanism mechanism);

// Largest U1 + U2 over the mechanism's feasible transfers.
double grid_max_collective(const GameInstance& g, Mechanism mechanism,
                           const GridSpec& spec);
double grid_max_collective(const GameInstance& g, Mechanism mechanism);

}  // namespace lotto
