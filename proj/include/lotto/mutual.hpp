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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lotto/adversary.hpp"
#include "lotto/game.hpp"
#include "lotto/quadratic.hpp"

namespace lotto {

// Budget-plane partition deciding which cases a contest transfer can reach.
enum class Region { kR1 = 1, kR2, kR3, kR4, kR5 };

std::string to_string(Region r);
Region classify_region(const GameInstance& g);

enum class Mechanism { kBudget, kContest, kJoint };

std::string to_string(Mechanism m);
std::optional<Mechanism> parse_mechanism(std::string_view text);

// Breakpoints in nu at which a contest transfer changes the adversary's
// best-response case (alpha1..alpha5), and the transfer sizes beyond which
// Player 2's improvement is automatic (beta1, beta2).
struct Thresholds {
  double alpha1 = 0.0;  // ratio equalization
  double alpha2 = 0.0;  // Case 2 (1>2) -> Case 1 (1>2)
  double alpha3 = 0.0;  // Case 1 (1<=2) -> Case 2 (1<=2)
  double alpha4 = 0.0;  // Case 2 (1<=2) -> Case 3 (1<=2)
  double alpha5 = 0.0;  // Case 3 (1>2) -> Case 2 (1>2)
  double beta1 = 0.0;
  double beta2 = 0.0;
};

Thresholds thresholds(const GameInstance& g);

// Places where the printed contest-transfer conditions are believed to be
// mistyped. Each can be evaluated literally or in the corrected reading.
enum class TypoSite : unsigned {
  kC2ExtraFactor = 0,     // c2 carries 4 phi1 phi2 instead of phi1 phi2
  kForm33PhiSquared = 1,  // sqrt(x1 phi2 phi2 / x2) bound for C2 -> C1 (1>2), Region 3
  kB7C7PhiSquared = 2,    // same product inside b7 and c7
  kForm45PhiSquared = 3,  // same product in the C2 -> C1 (1>2) bound, Regions 4-5
  kC14Form = 4,           // c14 missing the square of the bracket
  kRegion5SourceCase = 5, // last Region-5 set listed under Case 2 instead of Case 3
};
inline constexpr std::size_t kTypoSiteCount = 6;

std::string_view to_string(TypoSite site);
std::optional<TypoSite> parse_typo_site(std::string_view text);

struct ConditionReading {
  // Bit i set: evaluate TypoSite(i) exactly as printed.
  unsigned literal_mask = 0;

  static ConditionReading corrected() { return {0}; }
  static ConditionReading literal() { return {(1u << kTypoSiteCount) - 1}; }
  bool is_literal(TypoSite site) const {
    return (literal_mask >> static_cast<unsigned>(site)) & 1u;
  }
  ConditionReading with_literal(TypoSite site) const {
    return {literal_mask | (1u << static_cast<unsigned>(site))};
  }
};

struct MutualOptions {
  ConditionReading reading = ConditionReading::corrected();
  double case_eps = kDefaultCaseEps;
  // Windows narrower than this (relative to phi1 + phi2) count as empty.
  double window_slack = 1e-12;
  // Relative parameter perturbation used for the near-boundary flag.
  double boundary_distance = 1e-3;
  int budget_scan_points = 2001;
  int refine_iterations = 60;
  int joint_grid = 201;
  double gradient_step = 1e-6;
  double antiparallel_tol = 1e-8;
};

struct MutualBenefitVerdict {
  Mechanism mechanism = Mechanism::kContest;
  // Witnessed existence: true only with a witness that passes the
  // mutual-improvement test.
  bool exists = false;
  // Raw analytic predicate before witness validation (contest only; equals
  // `exists` for the numeric mechanisms).
  bool analytic = false;
  std::optional<Transfer> witness;
  // Which condition fired, e.g. "3.3" or "SC2"; empty when none did.
  std::string route;
  // Case transition of the firing form, e.g. "C2_1le2->C1_1gt2".
  std::string transition;
  bool near_boundary = false;
  // The game sits on the Case-4 ridge, or a transfer onto the ridge would
  // improve both players under the canonical split.
  bool case4_dependent = false;
};

// Gains below this multiple of phi1 + phi2 are treated as zero.
inline constexpr double kGainTolerance = 1e-13;

// Both players strictly better off than under `baseline`.
bool mutually_improves(const GameInstance& g, const Transfer& t,
                       const PlayerPayoffs& baseline, double eps = kDefaultCaseEps);

// min(dU1, dU2) relative to no transfer; -inf for infeasible transfers.
double min_gain(const GameInstance& g, const Transfer& t,
                const PlayerPayoffs& baseline, double eps = kDefaultCaseEps);

// True when t moves a game off the Case-4 ridge onto it. The adversary is
// indifferent there, so individual payoffs depend on the split convention.
bool lands_on_ridge(const GameInstance& g, const Transfer& t, double eps = kDefaultCaseEps);

// min_gain, but -inf for transfers that land on the ridge. Witness searches
// use this so that no verdict rests on the canonical Case-4 split.
double min_gain_off_ridge(const GameInstance& g, const Transfer& t,
                          const PlayerPayoffs& baseline, double eps = kDefaultCaseEps);

// Result of evaluating one condition set for a game oriented x1/phi1 <= x2/phi2.
struct FormResult {
  std::string id;
  std::string transition;
  bool fires = false;
  Interval window;  // candidate nu interval used to place a witness
};

// Strategically consistent (case-preserving) positive contest transfers.
// The game must be oriented x1/phi1 <= x2/phi2.
FormResult sc_contest_form(const GameInstance& g, const MutualOptions& opts = {});

// Every strategically inconsistent form applicable to the game's region and
// source case, in the order they are listed per region.
std::vector<FormResult> si_contest_forms(const GameInstance& g,
                                         const MutualOptions& opts = {});

// Verdicts restricted to one family, for a game oriented x1/phi1 <= x2/phi2.
// Witnesses are positive nu.
MutualBenefitVerdict sc_contest_exists(const GameInstance& g,
                                       const MutualOptions& opts = {});
MutualBenefitVerdict si_contest_exists(const GameInstance& g,
                                       const MutualOptions& opts = {});

// Raw analytic predicate for either transfer direction (no witness search).
bool contest_condition_holds(const GameInstance& g, const MutualOptions& opts = {});

MutualBenefitVerdict contest_mutual_exists(const GameInstance& g,
                                           const MutualOptions& opts = {});
MutualBenefitVerdict budget_mutual_exists(const GameInstance& g,
                                          const MutualOptions& opts = {});
MutualBenefitVerdict joint_mutual_exists(const GameInstance& g,
                                         const MutualOptions& opts = {});

MutualBenefitVerdict mutual_exists(const GameInstance& g, Mechanism m,
                                   const MutualOptions& opts = {});

}  // namespace lotto
