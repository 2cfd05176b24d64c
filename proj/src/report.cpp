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

#include "lotto/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace lotto {

AnalysisReport analyze(const GameInstance& g, const MutualOptions& opts) {
  AnalysisReport r;
  r.game = g;
  r.label = classify_case(g, opts.case_eps);
  r.region = classify_region(g);
  r.response = best_response(g, r.label);
  r.baseline = case_payoffs(g, r.label);
  r.thresholds = thresholds(g);
  r.budget = budget_mutual_exists(g, opts);
  r.contest = contest_mutual_exists(g, opts);
  r.joint = joint_mutual_exists(g, opts);
  r.collective = collective_report(g, opts.case_eps);
  return r;
}

double round_significant(double v, int digits) {
  if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  const double out = std::strtod(buf, nullptr);
  return out == 0.0 ? 0.0 : out;  // no negative zero in output
}

nlohmann::ordered_json to_json(const GameInstance& g) {
  return {{"phi1", round_significant(g.phi1)},
          {"phi2", round_significant(g.phi2)},
          {"x1", round_significant(g.x1)},
          {"x2", round_significant(g.x2)}};
}

nlohmann::ordered_json to_json(const Transfer& t) {
  return {{"tau", round_significant(t.tau)}, {"nu", round_significant(t.nu)}};
}

nlohmann::ordered_json to_json(const MutualBenefitVerdict& v) {
  nlohmann::ordered_json j = {{"mechanism", to_string(v.mechanism)},
                      {"exists", v.exists},
                      {"analytic", v.analytic},
                      {"witness", nullptr},
                      {"route", v.route},
                      {"transition", v.transition},
                      {"near_boundary", v.near_boundary},
                      {"case4_dependent", v.case4_dependent}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

nlohmann::ordered_json to_json(const CollectiveReport& r) {
  return {{"baseline", round_significant(r.baseline)},
          {"optimum", round_significant(r.optimum)},
          {"optimal_budget", to_json(r.optimal_budget)},
          {"optimal_contest", to_json(r.optimal_contest)},
          {"optimal_joint", to_json(r.optimal_joint)},
          {"improvable", r.improvable}};
}

nlohmann::ordered_json to_json(const AnalysisReport& r) {
  const Thresholds& t = r.thresholds;
  return {
      {"game", to_json(r.game)},
      {"case", to_string(r.label)},
      {"region", to_string(r.region)},
      {"xa", {round_significant(r.response.xa1), round_significant(r.response.xa2)}},
      {"u1", round_significant(r.baseline.u1)},
      {"u2", round_significant(r.baseline.u2)},
      {"thresholds",
       {{"alpha1", round_significant(t.alpha1)},
        {"alpha2", round_significant(t.alpha2)},
        {"alpha3", round_significant(t.alpha3)},
        {"alpha4", round_significant(t.alpha4)},
        {"alpha5", round_significant(t.alpha5)},
        {"beta1", round_significant(t.beta1)},
        {"beta2", round_significant(t.beta2)}}},
      {"mutual",
       {{"budget", to_json(r.budget)},
        {"contest", to_json(r.contest)},
        {"joint", to_json(r.joint)}}},
      {"collective", to_json(r.collective)},
  };
}

}  // namespace lotto
