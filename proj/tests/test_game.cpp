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
#include "lotto/game.hpp"

#include <cmath>
#include <limits>

using namespace lotto;
using lotto::testing::Gen;
using lotto::testing::kDiamond;

TEST_CASE("one_v_one_payoff examples") {
  CHECK(one_v_one_payoff(10, 1, 1).u_player == doctest::Approx(5.0));
  CHECK(one_v_one_payoff(12, 0.4, 1).u_player == doctest::Approx(2.4));
  CHECK(one_v_one_payoff(7, 0.3, 0).u_player == 7.0);
  CHECK(one_v_one_payoff(12, 2, 1).u_player == doctest::Approx(9.0));
}

TEST_CASE("one_v_one_payoff zero budgets") {
  CHECK(one_v_one_payoff(5, 0, 1).u_player == 0.0);
  CHECK(one_v_one_payoff(5, 0, 1).u_adversary == 5.0);
  CHECK(one_v_one_payoff(5, 0, 0).u_player == 5.0);
  CHECK(one_v_one_payoff(5, 2, 0).u_adversary == 0.0);
}

TEST_CASE("one_v_one_payoff rejects bad input") {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(one_v_one_payoff(0, 1, 1), ValidationError);
  CHECK_THROWS_AS(one_v_one_payoff(1, -1, 1), ValidationError);
  CHECK_THROWS_AS(one_v_one_payoff(1, 1, -0.5), ValidationError);
  CHECK_THROWS_AS(one_v_one_payoff(nan, 1, 1), ValidationError);
  CHECK_THROWS_AS(one_v_one_payoff(1, std::numeric_limits<double>::infinity(), 1),
                  ValidationError);
}

TEST_CASE("branches meet at equal budgets") {
  Gen gen(101);
  for (int i = 0; i < 1000; ++i) {
    const double phi = gen.uniform(0.1, 50), x = gen.uniform(0.01, 5);
    CHECK(one_v_one_payoff(phi, x, x).u_player == doctest::Approx(phi / 2).epsilon(1e-14));
    const double below = one_v_one_payoff(phi, x * (1 - 1e-9), x).u_player;
    const double above = one_v_one_payoff(phi, x * (1 + 1e-9), x).u_player;
    CHECK(std::abs(above - below) < 1e-7 * phi);
  }
}

TEST_CASE("payoff monotone in both budgets") {
  Gen gen(102);
  for (int i = 0; i < 2000; ++i) {
    const double phi = gen.uniform(0.1, 20);
    const double x = gen.uniform(0, 4), xa = gen.uniform(0, 4), d = gen.uniform(0, 1);
    CHECK(one_v_one_payoff(phi, x + d, xa).u_player >= one_v_one_payoff(phi, x, xa).u_player);
    CHECK(one_v_one_payoff(phi, x, xa + d).u_player <= one_v_one_payoff(phi, x, xa).u_player);
  }
}

TEST_CASE("post_transfer examples") {
  CHECK(post_transfer(kDiamond, {}) == kDiamond);
  const GameInstance contest = post_transfer(kDiamond, {0, 7.6});
  CHECK(contest.phi1 == doctest::Approx(4.4));
  CHECK(contest.phi2 == doctest::Approx(17.6));
  CHECK(contest.x1 == 0.4);
  CHECK(contest.x2 == 1.6);
  const GameInstance budget = post_transfer(kDiamond, {-0.69, 0});
  CHECK(budget.phi1 == 12);
  CHECK(budget.phi2 == 10);
  CHECK(budget.x1 == doctest::Approx(1.09));
  CHECK(budget.x2 == doctest::Approx(0.91));
}

TEST_CASE("post_transfer rejects infeasible transfers") {
  CHECK_THROWS_AS(post_transfer(kDiamond, {0.4, 0}), ValidationError);
  CHECK_THROWS_AS(post_transfer(kDiamond, {-1.6, 0}), ValidationError);
  CHECK_THROWS_AS(post_transfer(kDiamond, {0, 12}), ValidationError);
  CHECK_THROWS_AS(post_transfer(kDiamond, {0, -10}), ValidationError);
  CHECK_THROWS_AS(post_transfer(kDiamond, {0.4 - 1e-13, 0}), ValidationError);
  CHECK_NOTHROW(post_transfer(kDiamond, {0.4 - 1e-9, 0}));
  CHECK_FALSE(is_feasible(kDiamond, {std::nan(""), 0}));
}

TEST_CASE("post_transfer conserves totals") {
  Gen gen(103);
  for (int i = 0; i < 1000; ++i) {
    const GameInstance g = gen.game();
    const GameInstance bar = post_transfer(g, gen.transfer(g));
    CHECK(bar.total_valuation() == doctest::Approx(g.total_valuation()).epsilon(1e-14));
    CHECK(bar.total_budget() == doctest::Approx(g.total_budget()).epsilon(1e-14));
  }
}

TEST_CASE("swap_indices") {
  CHECK(swap_indices(kDiamond) == GameInstance{10, 12, 1.6, 0.4});
  CHECK(swap_indices(GameInstance{5, 5, 1, 1}) == GameInstance{5, 5, 1, 1});
  Gen gen(104);
  for (int i = 0; i < 100; ++i) {
    const GameInstance g = gen.game();
    CHECK(swap_indices(swap_indices(g)) == g);
  }
  static_assert(swap_indices(swap_indices(kDiamond)) == kDiamond);
}

TEST_CASE("validate") {
  CHECK_NOTHROW(validate(kDiamond));
  CHECK_THROWS_AS(validate(GameInstance{12, 10, 0, 1.6}), ValidationError);
  CHECK_THROWS_AS(validate(GameInstance{-1, 10, 1, 1.6}), ValidationError);
  CHECK_THROWS_AS(validate(GameInstance{12, std::nan(""), 1, 1}), ValidationError);
}
