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
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lotto/game.hpp"
#include "lotto/mutual.hpp"

namespace lotto {

// splitmix64: small, portable, and identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform on [lo, hi) from the top 53 bits.
  double uniform(double lo, double hi);

 private:
  std::uint64_t state_;
};

inline constexpr double kSampleLo = 0.05;
inline constexpr double kSampleHi = 3.0;

// Draws phi1, phi2, x1, x2 in that order, each uniform on [lo, hi).
GameInstance sample_game(SplitMix64& rng, double lo = kSampleLo, double hi = kSampleHi);

// Runs fn(i) for i in [0, n) on up to `threads` workers (0: hardware count).
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

enum class Parameter { kPhi1, kPhi2, kX1, kX2 };

std::string_view to_string(Parameter p);
std::optional<Parameter> parse_parameter(std::string_view text);
double& parameter_ref(GameInstance& g, Parameter p);

enum class SweepPredicate {
  kMutualBudget,
  kMutualContest,
  kMutualJoint,
  kCase,
  kRegion,
  kCollectiveGain,
};

std::string_view to_string(SweepPredicate p);
std::optional<SweepPredicate> parse_sweep_predicate(std::string_view text);

struct SweepAxis {
  Parameter parameter = Parameter::kX1;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 2;

  double value(int i) const { return lo + (hi - lo) * i / (steps - 1); }
};

// Parses "name:lo:hi:steps", e.g. "x1:0.02:3:300".
SweepAxis parse_axis(std::string_view text);

struct SweepSpec {
  // Supplies the two parameters that are not swept.
  GameInstance fixed;
  std::array<SweepAxis, 2> axes;
  SweepPredicate predicate = SweepPredicate::kMutualContest;
};

// Throws ValidationError unless the axes name two distinct parameters with
// positive ranges and steps >= 2, and the fixed parameters are positive.
void validate(const SweepSpec& spec);

// The predicate value for one game, as written to the CSV.
std::string evaluate_predicate(const GameInstance& g, SweepPredicate p,
                               const MutualOptions& opts);

// Row-major over (axes[0], axes[1]).
void write_sweep_csv(const SweepSpec& spec, const MutualOptions& opts, std::ostream& out,
                     int threads = 0);

// Payoffs along the mechanism's feasible interval (inset by a 1e-6 relative
// margin). The joint curve follows the contest axis.
void write_curve_csv(const GameInstance& g, Mechanism m, int steps, std::ostream& out,
                     double eps = kDefaultCaseEps);

struct VerifyRow {
  GameInstance game;
  std::string label;
  bool analytic = false;
  bool oracle = false;
  bool near_boundary = false;
  double closed_max = 0.0;
  double grid_max = 0.0;

  bool agree() const { return analytic == oracle; }
  bool max_agree() const;
};

struct VerifySummary {
  std::vector<VerifyRow> rows;
  int disagreements = 0;
  // Disagreements on games not flagged near-boundary.
  int unexplained = 0;
  int max_mismatches = 0;

  bool passed() const { return unexplained == 0 && max_mismatches == 0; }
};

// Compares the contest verdict and the collective optimum with the grid
// oracle on `count` seeded random games.
VerifySummary run_verify(int count, std::uint64_t seed, const MutualOptions& opts,
                         int threads = 0);
void write_verify_csv(const VerifySummary& summary, std::ostream& out);

struct CalibrationSite {
  std::string name;
  int literal_agree = 0;
  int corrected_agree = 0;
  int literal_unexplained = 0;
  int corrected_unexplained = 0;
};

struct CalibrationReport {
  int count = 0;
  std::uint64_t seed = 0;
  int oracle_positive = 0;
  std::vector<CalibrationSite> sites;
  CalibrationSite all;  // every site at once
};

// Evaluates each suspected typo site literally and corrected against the
// contest oracle on the same seeded games.
CalibrationReport run_calibration(int count, std::uint64_t seed, int threads = 0);
void write_calibration_markdown(const CalibrationReport& report, std::ostream& out);

}  // namespace lotto
