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

"""Brute-force fixtures for the golden game set.

Independent of the C++ library: the adversary split is found by maximizing
its objective numerically (no case formulas), and transfer verdicts come from
dense scans of the resulting payoffs. The printed values are frozen into
tests/test_fixtures.hpp.
"""

import numpy as np

GOLDEN = [
    (12, 10, 0.4, 1.6),
    (10, 1, 0.5, 0.5),
    (12, 10, 0.2, 0.3),
    (12, 10, 2, 2),
    (12, 10, 1.2, 1.3),
    (12, 10, 0.05, 0.3),
    (12, 10, 2.9, 1.95),
    (6.8, 4.4, 2.2, 1.3),
    (7.4, 7.2, 0.4, 0.05),
    (12, 10, 1.95, 0.1),
]


def player_share(phi, x, xa):
    """Player payoff of a one-vs-one General Lotto game (vectorized)."""
    x = np.asarray(x, dtype=float)
    xa = np.asarray(xa, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        weak = phi * x / (2 * xa)
        strong = phi * (1 - xa / (2 * x))
    return np.where(x <= xa, np.where(xa > 0, weak, phi), strong)


def adversary_split(phi1, phi2, x1, x2, iters=200):
    """Vectorized golden-section maximization of the adversary objective."""
    phi1, phi2, x1, x2 = np.broadcast_arrays(*map(np.asarray, (phi1, phi2, x1, x2)))

    def obj(a):
        return (phi1 - player_share(phi1, x1, a)) + (phi2 - player_share(phi2, x2, 1 - a))

    g = (np.sqrt(5) - 1) / 2
    lo = np.zeros(phi1.shape)
    hi = np.ones(phi1.shape)
    for _ in range(iters):
        c = hi - g * (hi - lo)
        d = lo + g * (hi - lo)
        left = obj(c) >= obj(d)
        hi = np.where(left, d, hi)
        lo = np.where(left, lo, c)
    a = 0.5 * (lo + hi)
    best = np.where(obj(np.ones_like(a)) >= obj(a), 1.0, a)
    best = np.where(obj(np.zeros_like(a)) >= obj(best), 0.0, best)
    return best


def payoffs(phi1, phi2, x1, x2):
    a = adversary_split(phi1, phi2, x1, x2)
    return player_share(phi1, x1, a), player_share(phi2, x2, 1 - a), a


def scan(game, mechanism, n=200001):
    phi1, phi2, x1, x2 = game
    u1, u2, _ = payoffs(*map(np.float64, game))
    lo, hi = (-x2, x1) if mechanism == "budget" else (-phi2, phi1)
    t = np.linspace(lo, hi, n)[1:-1]
    if mechanism == "budget":
        v1, v2, _ = payoffs(phi1, phi2, x1 - t, x2 + t)
    else:
        v1, v2, _ = payoffs(phi1 - t, phi2 + t, x1, x2)
    gain = np.minimum(v1 - u1, v2 - u2)
    # Ignore the ratio-equalizing point, where the adversary is indifferent.
    ok = gain > 1e-9 * (phi1 + phi2)
    return bool(ok.any()), float(np.max(v1 + v2))


def main():
    for game in GOLDEN:
        u1, u2, a = payoffs(*map(np.float64, game))
        budget, bmax = scan(game, "budget")
        contest, cmax = scan(game, "contest")
        print(
            f"{game}: xa1={float(a):.12g} u1={float(u1):.12g} u2={float(u2):.12g} "
            f"budget={budget} contest={contest} max_budget={bmax:.9g} max_contest={cmax:.9g}"
        )


if __name__ == "__main__":
    main()
