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
#include "lotto/mutual.hpp"
#include "lotto/oracle.hpp"

#include <cmath>
#include <string>

using namespace lotto;
using namespace lotto::testing;

namespace {

// Games pinned for each part of the transfer-set structure, each confirmed
// by the grid oracle below.
constexpr GameInstance kBudgetOnly{12, 10, 0.05, 0.3};
constexpr GameInstance kContestOnly{12, 10, 2.9, 1.95};
constexpr GameInstance kJointOnly{6.8, 4.4, 2.2, 1.3};

GameInstance oriented(const GameInstance& g) {
  return classify_case(g).orientation == Orientation::kOneGtTwo ? swap_indices(g) : g;
}

}  // namespace

TEST_CASE("classify_region") {
  CHECK(to_string(classify_region(kDiamond)) == "R3");
  CHECK(to_string(classify_region(GameInstance{12, 10, 2, 2})) == "R1");
  CHECK(to_string(classify_region(GameInstance{12, 10, 2, 0.5})) == "R2");
  CHECK(to_string(classify_region(GameInstance{12, 10, 0.6, 0.7})) == "R4");
  CHECK(to_string(classify_region(kLowBudget)) == "R5");
  // Boundaries belong to the larger-budget side.
  CHECK(to_string(classify_region(GameInstance{1, 1, 1, 1})) == "R1");
  CHECK(to_string(classify_region(GameInstance{1, 1, 0.5, 0.5})) == "R4");
}

TEST_CASE("thresholds for the golden game") {
  const Thresholds t = thresholds(kDiamond);
  CHECK(t.alpha1 == doctest::Approx(7.6));
  CHECK(t.alpha2 == doctest::Approx(5.6 / 1.64));
  CHECK(t.alpha3 == doctest::Approx((7.68 - 10) / 1.64));
  CHECK(t.alpha4 == doctest::Approx((7.68 - 0.36 * 10) / (0.36 + 0.64)));
  CHECK(t.alpha5 == doctest::Approx((0.36 * 12 - 6.4) / 1.0));
  CHECK(t.beta1 == doctest::Approx(0.4 * 10 / 1.6));
  CHECK(t.beta2 == doctest::Approx(std::sqrt(0.4 * 120 / 4.096) - 0.36 * 10 / 2.56));
}

TEST_CASE("alpha1 equalizes the ratios") {
  Gen gen(401);
  for (int i = 0; i < 500; ++i) {
    const GameInstance g = gen.game();
    const GameInstance bar = post_transfer(g, {0, thresholds(g).alpha1});
    CHECK(bar.ratio1() == doctest::Approx(bar.ratio2()).epsilon(1e-10));
  }
}

TEST_CASE("golden game has mutually beneficial transfers of every kind") {
  const MutualBenefitVerdict c = contest_mutual_exists(kDiamond);
  CHECK(c.exists);
  CHECK(c.analytic);
  CHECK(c.route == "SC2");
  CHECK_FALSE(c.near_boundary);
  REQUIRE(c.witness);
  CHECK(c.witness->tau == 0.0);
  CHECK(c.witness->nu > 0.0);

  const MutualBenefitVerdict b = budget_mutual_exists(kDiamond);
  CHECK(b.exists);
  REQUIRE(b.witness);
  CHECK(b.witness->nu == 0.0);
  CHECK(b.witness->tau < 0.0);

  CHECK(joint_mutual_exists(kDiamond).exists);

  const FormResult sc = sc_contest_form(kDiamond);
  CHECK(sc.fires);
  CHECK(sc.window.lo == 0.0);
  CHECK(sc.window.hi == doctest::Approx(7.6));
}

TEST_CASE("ridge game admits no mutually beneficial transfer") {
  for (Mechanism m : {Mechanism::kBudget, Mechanism::kContest, Mechanism::kJoint}) {
    const MutualBenefitVerdict v = mutual_exists(kRidge, m);
    CHECK_FALSE(v.exists);
    CHECK(v.case4_dependent);
    CHECK_FALSE(grid_mutual_search(kRidge, m).exists);
  }
}

TEST_CASE("Region-1 form stays silent where it should") {
  const GameInstance g{12, 10, 1.2, 1.3};
  const auto forms = si_contest_forms(g);
  REQUIRE(forms.size() == 1);
  CHECK(forms[0].id == "1.1");
  CHECK_FALSE(forms[0].fires);
}

TEST_CASE("contest conditions need the 1<=2 orientation") {
  CHECK_THROWS_AS(sc_contest_form(swap_indices(kDiamond)), std::invalid_argument);
  CHECK_THROWS_AS(si_contest_forms(swap_indices(kDiamond)), std::invalid_argument);
}

TEST_CASE("verdicts reproduce the numeric fixtures") {
  for (const OracleFixture& f : kGolden) {
    CAPTURE(to_string(f.game));
    CHECK(budget_mutual_exists(f.game).exists == f.budget);
    CHECK(contest_mutual_exists(f.game).exists == f.contest);
  }
}

TEST_CASE("transfer-set structure examples") {
  CHECK(budget_mutual_exists(kBudgetOnly).exists);
  CHECK_FALSE(contest_mutual_exists(kBudgetOnly).exists);
  CHECK(grid_mutual_search(kBudgetOnly, Mechanism::kBudget).exists);
  CHECK_FALSE(grid_mutual_search(kBudgetOnly, Mechanism::kContest).exists);

  CHECK(kContestOnly.x1 > 1);
  CHECK_FALSE(budget_mutual_exists(kContestOnly).exists);
  CHECK(contest_mutual_exists(kContestOnly).exists);
  CHECK_FALSE(grid_mutual_search(kContestOnly, Mechanism::kBudget).exists);
  CHECK(grid_mutual_search(kContestOnly, Mechanism::kContest).exists);

  CHECK_FALSE(budget_mutual_exists(kJointOnly).exists);
  CHECK_FALSE(contest_mutual_exists(kJointOnly).exists);
  CHECK(joint_mutual_exists(kJointOnly).exists);
  CHECK_FALSE(grid_mutual_search(kJointOnly, Mechanism::kBudget).exists);
  CHECK_FALSE(grid_mutual_search(kJointOnly, Mechanism::kContest).exists);
  CHECK(grid_mutual_search(kJointOnly, Mechanism::kJoint).exists);
}

TEST_CASE("witnesses pass the mutual-improvement test") {
  Gen gen(402);
  for (int i = 0; i < 400; ++i) {
    const GameInstance g = gen.game();
    const PlayerPayoffs base = player_payoffs(g, {});
    for (Mechanism m : {Mechanism::kBudget, Mechanism::kContest, Mechanism::kJoint}) {
      const MutualBenefitVerdict v = mutual_exists(g, m);
      CHECK(v.exists == v.witness.has_value());
      if (!v.witness) continue;
      CAPTURE(to_string(g));
      CHECK(is_feasible(g, *v.witness));
      CHECK(mutually_improves(g, *v.witness, base));
      if (m == Mechanism::kBudget) CHECK(v.witness->nu == 0.0);
      if (m == Mechanism::kContest) CHECK(v.witness->tau == 0.0);
    }
  }
}

TEST_CASE("budget and contest transfers are special joint transfers") {
  Gen gen(403);
  for (int i = 0; i < 400; ++i) {
    const GameInstance g = gen.game();
    const bool joint = joint_mutual_exists(g).exists;
    if (budget_mutual_exists(g).exists) CHECK(joint);
    if (contest_mutual_exists(g).exists) CHECK(joint);
  }
}

TEST_CASE("contest verdict is invariant under relabeling the players") {
  Gen gen(404);
  for (int i = 0; i < 400; ++i) {
    const GameInstance g = gen.game();
    const MutualBenefitVerdict a = contest_mutual_exists(g);
    const MutualBenefitVerdict b = contest_mutual_exists(swap_indices(g));
    CHECK(a.analytic == b.analytic);
    CHECK(a.exists == b.exists);
    if (a.witness && b.witness) CHECK(a.witness->nu * b.witness->nu < 0);
  }
}

TEST_CASE("firing forms land in the case they name") {
  Gen gen(405);
  int checked = 0;
  for (int i = 0; i < 3000; ++i) {
    const GameInstance og = oriented(gen.game());
    if (classify_case(og).index == CaseIndex::kCase4) continue;
    const MutualBenefitVerdict v = si_contest_exists(og);
    if (!v.witness) continue;
    const std::string target = v.transition.substr(v.transition.find("->") + 2);
    CAPTURE(to_string(og));
    CAPTURE(v.route);
    CHECK(to_string(classify_case(post_transfer(og, *v.witness))) == target);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("analytic contest verdict matches the oracle") {
  Gen gen(406);
  int unexplained = 0;
  for (int i = 0; i < 500; ++i) {
    const GameInstance g = gen.game();
    const MutualBenefitVerdict v = contest_mutual_exists(g);
    const bool oracle = grid_mutual_search(g, Mechanism::kContest).exists;
    if (v.analytic != oracle && !v.near_boundary) {
      ++unexplained;
      MESSAGE("disagreement at " << to_string(g));
    }
  }
  CHECK(unexplained == 0);
}

TEST_CASE("each literal reading disagrees with the oracle where the corrected one agrees") {
  Gen gen(407);
  std::vector<GameInstance> games;
  std::vector<bool> oracle;
  for (int i = 0; i < 3000; ++i) {
    games.push_back(gen.game());
    oracle.push_back(grid_mutual_search(games.back(), Mechanism::kContest).exists);
  }
  auto mismatches = [&](ConditionReading reading) {
    MutualOptions opts;
    opts.reading = reading;
    int n = 0;
    for (std::size_t i = 0; i < games.size(); ++i) {
      n += contest_condition_holds(games[i], opts) != oracle[i];
    }
    return n;
  };
  CHECK(mismatches(ConditionReading::corrected()) == 0);
  for (std::size_t s = 0; s < kTypoSiteCount; ++s) {
    const auto site = static_cast<TypoSite>(s);
    CAPTURE(std::string(to_string(site)));
    CHECK(mismatches(ConditionReading::corrected().with_literal(site)) > 0);
  }
}

TEST_CASE("typo site names round-trip") {
  for (std::size_t s = 0; s < kTypoSiteCount; ++s) {
    const auto site = static_cast<TypoSite>(s);
    CHECK(parse_typo_site(to_string(site)) == site);
  }
  CHECK_FALSE(parse_typo_site("nope").has_value());
  CHECK(ConditionReading::literal().is_literal(TypoSite::kC14Form));
  CHECK_FALSE(ConditionReading::corrected().is_literal(TypoSite::kC14Form));
}

TEST_CASE("near-boundary flag marks games next to a condition surface") {
  // Just inside the strategically consistent Case-3 condition: x2 barely
  // above 4 phi1 phi2 x1 / (phi1 - phi2)^2.
  const double phi1 = 12, phi2 = 10, x1 = 0.0005;
  const double edge = 4 * phi1 * phi2 * x1 / ((phi1 - phi2) * (phi1 - phi2));
  const GameInstance g{phi1, phi2, x1, edge * (1 + 1e-5)};
  REQUIRE(to_string(classify_case(g)) == "C3_1le2");
  CHECK(contest_mutual_exists(g).near_boundary);
  CHECK_FALSE(contest_mutual_exists(kDiamond).near_boundary);
}

TEST_CASE("mechanism names") {
  CHECK(parse_mechanism("budget") == Mechanism::kBudget);
  CHECK(parse_mechanism("joint") == Mechanism::kJoint);
  CHECK_FALSE(parse_mechanism("both").has_value());
  CHECK(to_string(Mechanism::kContest) == "contest");
}
