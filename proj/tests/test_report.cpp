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
#include "lotto/report.hpp"

#include <chrono>

using namespace lotto;
using namespace lotto::testing;

TEST_CASE("analysis report for the golden game") {
  const auto j = to_json(analyze(kDiamond));
  CHECK(j["case"] == "C2_1le2");
  CHECK(j["region"] == "R3");
  CHECK(j["game"]["phi1"] == 12.0);
  CHECK(j["xa"].size() == 2);
  CHECK(j["xa"][0].get<double>() == doctest::Approx(0.876356092008));
  CHECK(j["u1"].get<double>() == doctest::Approx(2.73861278753));
  for (const char* m : {"budget", "contest", "joint"}) {
    CAPTURE(m);
    CHECK(j["mutual"][m]["exists"] == true);
    CHECK(j["mutual"][m]["mechanism"] == m);
    CHECK(j["mutual"][m]["witness"].is_object());
  }
  CHECK(j["mutual"]["contest"]["route"] == "SC2");
  CHECK(j["mutual"]["contest"]["witness"]["tau"] == 0.0);
  CHECK(j["collective"]["optimum"] == 16.5);
  CHECK(j["collective"]["optimal_contest"]["nu"] == 7.6);
  CHECK(j["collective"]["optimal_budget"]["tau"].get<double>() == -0.690909090909);
  CHECK(j["collective"]["improvable"] == true);
}

TEST_CASE("analysis report for the ridge game") {
  const auto j = to_json(analyze(kRidge));
  CHECK(j["case"] == "C4");
  for (const char* m : {"budget", "contest", "joint"}) {
    CHECK(j["mutual"][m]["exists"] == false);
    CHECK(j["mutual"][m]["witness"].is_null());
  }
  CHECK(j["collective"]["improvable"] == false);
}

TEST_CASE("analysis rejects invalid games") {
  CHECK_THROWS_AS(analyze(GameInstance{12, 10, 0, 1.6}), ValidationError);
}

TEST_CASE("rounding to significant digits") {
  CHECK(round_significant(0.123456789012345) == 0.123456789012);
  CHECK(round_significant(-7.6000000000000005) == -7.6);
  CHECK(round_significant(-0.0) == 0.0);
  CHECK_FALSE(std::signbit(round_significant(-1e-300 * 1e-300)));
  CHECK(round_significant(123456789012345.0) == 123456789012000.0);
}

TEST_CASE("serialization is deterministic") {
  CHECK(to_json(analyze(kDiamond)).dump() == to_json(analyze(kDiamond)).dump());
}

TEST_CASE("verdict schema") {
  MutualBenefitVerdict v;
  v.mechanism = Mechanism::kContest;
  v.exists = true;
  v.witness = Transfer{0, 1.5};
  v.route = "3.3";
  const auto j = to_json(v);
  CHECK(j.dump() ==
        R"({"mechanism":"contest","exists":true,"analytic":false,"witness":{"tau":0.0,"nu":1.5},)"
        R"("route":"3.3","transition":"","near_boundary":false,"case4_dependent":false})");
}

TEST_CASE("analysis is fast") {
  const auto start = std::chrono::steady_clock::now();
  const AnalysisReport r = analyze(kDiamond);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  CHECK(r.contest.exists);
  CHECK(ms < 10.0);
}
