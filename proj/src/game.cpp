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

#include "lotto/game.hpp"

#include <cmath>
#include <sstream>

namespace lotto {
namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void validate(const GameInstance& g) {
  if (!positive_finite(g.phi1) || !positive_finite(g.phi2) ||
      !positive_finite(g.x1) || !positive_finite(g.x2)) {
    throw ValidationError("game parameters must be finite and strictly positive: " +
                          to_string(g));
  }
}

bool is_feasible(const GameInstance& g, const Transfer& t) {
  if (!std::isfinite(t.tau) || !std::isfinite(t.nu)) return false;
  return g.x1 - t.tau > kFeasibilitySlack && g.x2 + t.tau > kFeasibilitySlack &&
         g.phi1 - t.nu > kFeasibilitySlack && g.phi2 + t.nu > kFeasibilitySlack;
}

PayoffPair one_v_one_payoff(double phi, double x_player, double x_adv) {
  if (!positive_finite(phi)) {
    throw ValidationError("valuation must be finite and positive");
  }
  if (!std::isfinite(x_player) || !std::isfinite(x_adv) || x_player < 0.0 ||
      x_adv < 0.0) {
    throw ValidationError("budgets must be finite and nonnegative");
  }
  double u;
  if (x_adv == 0.0) {
    u = phi;
  } else if (x_player <= x_adv) {
    u = phi * (x_player / (2.0 * x_adv));
  } else {
    u = phi * (1.0 - x_adv / (2.0 * x_player));
  }
  return PayoffPair{u, phi - u};
}

GameInstance post_transfer(const GameInstance& g, const Transfer& t) {
  validate(g);
  if (!is_feasible(g, t)) {
    std::ostringstream os;
    os << "infeasible transfer (tau=" << t.tau << ", nu=" << t.nu << ") for "
       << to_string(g);
    throw ValidationError(os.str());
  }
  return GameInstance{g.phi1 - t.nu, g.phi2 + t.nu, g.x1 - t.tau, g.x2 + t.tau};
}

std::string to_string(const GameInstance& g) {
  std::ostringstream os;
  os.precision(12);
  os << "(" << g.phi1 << ", " << g.phi2 << ", " << g.x1 << ", " << g.x2 << ")";
  return os.str();
}

}  // namespace lotto
