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

// Shared test data. Oracle values come from tools/derive_fixtures.py, which
// maximizes the adversary objective numerically and scans transfers densely
// without any of the library's closed forms.

#include <cmath>
#include <cstdint>

#include "lotto/experiments.hpp"
#include "lotto/game.hpp"

namespace lotto::testing {

inline constexpr GameInstance kDiamond{12, 10, 0.4, 1.6};
inline constexpr GameInstance kRidge{10, 10, 2, 2};
inline constexpr GameInstance kLowBudget{12, 10, 0.2, 0.3};

struct OracleFixture {
  GameInstance game;
  const char* label;
  double xa1;
  double u1;
  double u2;
  bool budget;
  bool contest;
};

inline constexpr OracleFixture kGolden[] = {
    {{12, 10, 0.4, 1.6}, "C2_1le2", 0.876356087642, 2.73861280117, 9.61361277388, true, true},
    {{10, 1, 0.5, 0.5}, "C1_1le2", 1.0, 2.5, 1.0, false, true},
    {{12, 10, 0.2, 0.3}, "C3_1le2", 0.472135943594, 2.5416408479, 2.8416407251, false, false},
    {{12, 10, 2, 2}, "C1_1le2", 1.0, 9.0, 10.0, false, false},
    {{12, 10, 1.2, 1.3}, "C1_1le2", 1.0, 7.0, 10.0, false, false},
    {{12, 10, 0.05, 0.3}, "C3_1le2", 0.309016974398, 0.970820456011, 2.17082033049, true,
     false},
    {{12, 10, 2.9, 1.95}, "C1_1gt2", 0.0, 12.0, 7.4358974359, false, true},
    {{6.8, 4.4, 2.2, 1.3}, "C1_1gt2", 0.0, 6.8, 2.70769230769, false, false},
    {{7.4, 7.2, 0.4, 0.05}, "C3_1gt2", 0.74143112821, 1.99613955186, 0.696139480186, true,
     false},
    {{12, 10, 1.95, 0.1}, "C2_1gt2", 0.596887115676, 10.1634242595, 1.2403473554, true,
     false},
};

// Agreement with a numeric fixture: the fixture's optimizer resolves the
// adversary split to about 1e-8.
inline constexpr double kFixtureTol = 1e-6;

inline bool near_rel(double a, double b, double rel, double abs_floor = 0.0) {
  return std::abs(a - b) <= std::max(rel * std::max(std::abs(a), std::abs(b)), abs_floor);
}

// Hand-rolled generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return rng_.uniform(lo, hi); }
  GameInstance game(double lo = kSampleLo, double hi = kSampleHi) {
    return sample_game(rng_, lo, hi);
  }
  // A feasible transfer, at most `reach` of the way to each bound.
  Transfer transfer(const GameInstance& g, double reach = 0.95) {
    return {uniform(-reach * g.x2, reach * g.x1), uniform(-reach * g.phi2, reach * g.phi1)};
  }

 private:
  SplitMix64 rng_;
};

}  // namespace lotto::testing
