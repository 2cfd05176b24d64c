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

#include <string>

#include "json.hpp"
#include "lotto/adversary.hpp"
#include "lotto/collective.hpp"
#include "lotto/game.hpp"
#include "lotto/mutual.hpp"

namespace lotto {

// Everything known about a single game.
struct AnalysisReport {
  GameInstance game;
  CaseLabel label;
  Region region = Region::kR1;
  AdversaryAllocation response;
  PlayerPayoffs baseline;
  Thresholds thresholds;
  MutualBenefitVerdict budget;
  MutualBenefitVerdict contest;
  MutualBenefitVerdict joint;
  CollectiveReport collective;
};

AnalysisReport analyze(const GameInstance& g, const MutualOptions& opts = {});

// Values are rounded to this many significant digits when serialized.
inline constexpr int kSerializedDigits = 12;

double round_significant(double v, int digits = kSerializedDigits);

nlohmann::ordered_json to_json(const GameInstance& g);
nlohmann::ordered_json to_json(const Transfer& t);
nlohmann::ordered_json to_json(const MutualBenefitVerdict& v);
nlohmann::ordered_json to_json(const CollectiveReport& r);
nlohmann::ordered_json to_json(const AnalysisReport& r);

}  // namespace lotto
