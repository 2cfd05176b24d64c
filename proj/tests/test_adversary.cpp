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

#include "doctest.h"
#include "fixtures.hpp"
#include "lotto/adversary.hpp"
#include "lotto/oracle.hpp"

#include <cmath>

using namespace lotto;
using namespace lotto::testing;

TEST_CASE("classify_case examples") {
  CHECK(to_string(classify_case(kDiamond)) == "C2_1le2");
  CHECK(to_string(classify_case(kRidge)) == "C4");
  CHECK(to_string(classify_case(GameInstance{10, 1, 0.5, 0.5})) == "C1_1le2");
  CHECK(to_string(classify_case(kLowBudget)) == "C3_1le2");
  CHECK(to_string(classify_case(swap_indices(kDiamond))) == "C2_1gt2");
}

TEST_CASE("case boundary ties") {
  // x1 x2 phi1 / phi2 == 1 exactly: Case 1.
  CHECK(to_string(classify_case(GameInstance{1, 1, 0.5, 2})) == "C1_1le2");
  // Equal ratios below unit total budget: symmetric interior split.
  const GameInstance low{2, 4, 0.2, 0.4};
  CHECK(to_string(classify_case(low)) == "C3_1le2");
  const AdversaryAllocation a = best_response(low);
  CHECK(a.xa1 == doctest::Approx(1.0 / 3));
  // Ratio equality decided with the relative tolerance.
  CHECK(to_string(classify_case(GameInstance{10, 10, 2, 2 * (1 + 1e-11)})) == "C4");
  CHECK(to_string(classify_case(GameInstance{10, 10, 2, 2 * (1 + 1e-6)})) == "C1_1le2");
  CHECK(to_string(classify_case(GameInstance{10, 10, 2, 2 * (1 + 1e-6)}, 1e-5)) == "C4");
}

TEST_CASE("case labels round-trip") {
  for (const char* text : {"C1_1le2", "C2_1le2", "C3_1le2", "C1_1gt2", "C2_1gt2", "C3_1gt2",
                           "C4"}) {
    const auto label = parse_case_label(text);
    REQUIRE(label.has_value());
    CHECK(to_string(*label) == text);
  }
  CHECK_FALSE(parse_case_label("C5_1le2").has_value());
  CHECK_FALSE(parse_case_label("C4_1le2").has_value());
  CHECK(to_string(mirrored(*parse_case_label("C2_1le2"))) == "C2_1gt2");
}

TEST_CASE("best_response examples") {
  AdversaryAllocation a = best_response(GameInstance{10, 1, 0.5, 0.5});
  CHECK(a.xa1 == 1.0);
  CHECK(a.xa2 == 0.0);
  a = best_response(kDiamond);
  CHECK(a.xa1 == doctest::Approx(std::sqrt(0.768)).epsilon(1e-14));
  CHECK(a.xa1 == doctest::Approx(0.876356).epsilon(1e-6));
  a = best_response(kLowBudget);
  CHECK(a.xa1 == doctest::Approx(std::sqrt(2.4) / (std::sqrt(2.4) + std::sqrt(3))));
  CHECK(a.xa1 == doctest::Approx(0.47214).epsilon(1e-5));
  a = best_response(kRidge);
  CHECK(a.xa1 == 0.5);
  CHECK(a.xa2 == 0.5);
}

TEST_CASE("player_payoffs examples") {
  PlayerPayoffs p = player_payoffs(kDiamond, {});
  CHECK(p.u1 == doctest::Approx(0.5 * std::sqrt(30.0)).epsilon(1e-14));
  CHECK(p.u2 == doctest::Approx(10 * (1 - 1 / 3.2) + 0.5 * std::sqrt(30.0)).epsilon(1e-14));
  CHECK(p.u1 + p.u2 == doctest::Approx(12.3522).epsilon(1e-5));
  CHECK(player_payoffs(GameInstance{10, 1, 0.5, 0.5}, {}).u2 == 1.0);
  p = player_payoffs(kRidge, {});
  // Proportional split 0.5 / 0.5 against budgets of 2.
  CHECK(p.u1 == doctest::Approx(8.75));
  CHECK(p.u2 == doctest::Approx(8.75));
  CHECK_THROWS_AS(player_payoffs(kDiamond, {0.5, 0}), ValidationError);
}

TEST_CASE("closed forms reproduce the numeric fixtures") {
  for (const OracleFixture& f : kGolden) {
    CAPTURE(to_string(f.game));
    CHECK(to_string(classify_case(f.game)) == f.label);
    CHECK(best_response(f.game).xa1 == doctest::Approx(f.xa1).epsilon(kFixtureTol));
    const PlayerPayoffs p = player_payoffs(f.game, {});
    CHECK(near_rel(p.u1, f.u1, kFixtureTol));
    CHECK(near_rel(p.u2, f.u2, kFixtureTol));
  }
}

TEST_CASE("closed forms agree with payoffs at the closed-form split") {
  Gen gen(201);
  for (int i = 0; i < 5000; ++i) {
    const GameInstance g = gen.game();
    const CaseLabel label = classify_case(g);
    if (label.index == CaseIndex::kCase4) continue;
    const PlayerPayoffs closed = case_payoffs(g, label);
    const PlayerPayoffs direct = payoffs_at_allocation(g, best_response(g, label));
    CHECK(near_rel(closed.u1, direct.u1, 1e-12, 1e-14));
    CHECK(near_rel(closed.u2, direct.u2, 1e-12, 1e-14));
  }
}

TEST_CASE("closed-form split is optimal against a dense grid") {
  Gen gen(202);
  for (int i = 0; i < 200; ++i) {
    const GameInstance g = gen.game();
    const AdversaryAllocation a = best_response(g);
    const double best = adversary_objective(g, a.xa1, a.xa2);
    for (int k = 0; k <= 10000; ++k) {
      const double xa1 = k / 10000.0;
      REQUIRE(adversary_objective(g, xa1, 1 - xa1) <= best + 1e-9);
    }
  }
}

TEST_CASE("Case-4 collective payoff does not depend on the split") {
  Gen gen(203);
  for (int i = 0; i < 500; ++i) {
    const double r = gen.uniform(0.05, 1.0);
    const double phi1 = gen.uniform(0.5, 5), phi2 = gen.uniform(0.5, 5);
    GameInstance g{phi1, phi2, r * phi1, r * phi2};
    if (g.total_budget() < 1.0) continue;
    const double total = case_payoffs(g, classify_case(g)).u1 +
                         case_payoffs(g, classify_case(g)).u2;
    // Any split with xa_i <= x_i.
    const double lo = std::max(0.0, 1.0 - g.x2), hi = std::min(1.0, g.x1);
    for (int k = 0; k <= 20; ++k) {
      const double xa1 = lo + (hi - lo) * k / 20;
      const PlayerPayoffs p = payoffs_at_allocation(g, {xa1, 1 - xa1});
      CHECK(p.u1 + p.u2 == doctest::Approx(total).epsilon(1e-12));
    }
  }
}

TEST_CASE("grid oracle confirms the split on the fixtures") {
  for (const OracleFixture& f : kGolden) {
    const AdversaryAllocation grid = grid_best_response(f.game);
    CHECK(grid.xa1 == doctest::Approx(best_response(f.game).xa1).epsilon(1e-6));
  }
}
