# Copyright 2026 The Lotto Alliance Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the Coalitional General Lotto engine."""

import json

from ._core import (
    GameInstance,
    Transfer,
    ValidationError,
    best_response,
    classify_case,
    classify_region,
    collective_payoff,
    collectively_beneficial_exists,
    grid_best_response,
    grid_max_collective,
    is_feasible,
    max_collective_payoff,
    one_v_one_payoff,
    optimal_budget_transfer,
    optimal_contest_transfer,
    player_payoffs,
    post_transfer,
    quadratic_window,
    swap_indices,
)
from . import _core

DEFAULT_EPS = 1e-9


def mutual_exists(game, mechanism, eps=DEFAULT_EPS, typo_mode="corrected"):
    """Mutual-benefit verdict for "budget", "contest" or "joint" as a dict."""
    return json.loads(_core._verdict_json(game, mechanism, eps, typo_mode))


def grid_mutual_search(game, mechanism):
    """Oracle verdict for the same question, by brute-force search."""
    return json.loads(_core._grid_verdict_json(game, mechanism))


def analyze(game, eps=DEFAULT_EPS, typo_mode="corrected"):
    """The full per-game report, as emitted by `lotto analyze`."""
    return json.loads(_core._analyze_json(game, eps, typo_mode))


__all__ = [
    "GameInstance",
    "Transfer",
    "ValidationError",
    "analyze",
    "best_response",
    "classify_case",
    "classify_region",
    "collective_payoff",
    "collectively_beneficial_exists",
    "grid_best_response",
    "grid_max_collective",
    "grid_mutual_search",
    "is_feasible",
    "max_collective_payoff",
    "mutual_exists",
    "one_v_one_payoff",
    "optimal_budget_transfer",
    "optimal_contest_transfer",
    "player_payoffs",
    "post_transfer",
    "quadratic_window",
    "swap_indices",
]
