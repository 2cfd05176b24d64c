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

#include "lotto/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "lotto/collective.hpp"

namespace lotto {
namespace {

constexpr double kInvGolden = 0.6180339887498949;

template <typename F>
double golden_max(const F& f, double lo, double hi, int iterations, double* arg) {
  double a = lo, b = hi;
  double c = b - kInvGolden * (b - a), d = a + kInvGolden * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvGolden * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvGolden * (b - a);
      fd = f(d);
    }
  }
  *arg = fc >= fd ? c : d;
  return std::max(fc, fd);
}

// Inset grid over the open interval (lo, hi).
std::vector<double> axis(double lo, double hi, const GridSpec& spec) {
  const double inset = spec.margin * (hi - lo);
  const double a = lo + inset, b = hi - inset;
  std::vector<double> out(spec.resolution);
  for (int i = 0; i < spec.resolution; ++i) {
    out[i] = a + (b - a) * i / (spec.resolution - 1);
  }
  return out;
}

// Indices of local maxima of v, best first, at most `limit`.
std::vector<std::size_t> local_maxima(const std::vector<double>& v, std::size_t limit) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool left = i == 0 || v[i] >= v[i - 1];
    const bool right = i + 1 == v.size() || v[i] >= v[i + 1];
    if (left && right && std::isfinite(v[i])) idx.push_back(i);
  }
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  if (idx.size() > limit) idx.resize(limit);
  return idx;
}

struct Box {
  double lo, hi;
};

Box feasible_range(const GameInstance& g, Mechanism m) {
  return m == Mechanism::kBudget ? Box{-g.x2, g.x1} : Box{-g.phi2, g.phi1};
}

Transfer along(Mechanism m, double v) {
  return m == Mechanism::kBudget ? Transfer{v, 0.0} : Transfer{0.0, v};
}

constexpr int kRefineIterations = 80;

}  // namespace

void validate(const GridSpec& spec) {
  if (spec.resolution < 3) throw ValidationError("grid resolution must be at least 3");
  if (!(spec.margin > 0.0 && spec.margin < 0.5)) {
    throw ValidationError("grid margin must lie in (0, 0.5)");
  }
}

AdversaryAllocation grid_best_response(const GameInstance& g_bar, const GridSpec& spec) {
  validate(g_bar);
  validate(spec);
  auto objective = [&](double a) { return adversary_objective(g_bar, a, 1.0 - a); };
  const int n = spec.resolution;
  int best = 0;
  double best_val = -kInf;
  for (int i = 0; i < n; ++i) {
    const double v = objective(static_cast<double>(i) / (n - 1));
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  const double h = 1.0 / (n - 1);
  const double lo = std::max(0.0, (best - 1) * h), hi = std::min(1.0, (best + 1) * h);
  double arg = static_cast<double>(best) / (n - 1);
  if (golden_max(objective, lo, hi, kRefineIterations, &arg) < best_val) {
    arg = static_cast<double>(best) / (n - 1);
  }
  // The objective is concave; bisect on the sign of a central difference to
  // pin the argmax below golden-section precision.
  const double step = 1e-5 * h;
  double a = std::max(lo, arg - h * 1e-2), b = std::min(hi, arg + h * 1e-2);
  auto slope = [&](double x) { return objective(x + step) - objective(x - step); };
  if (a - step >= 0.0 && b + step <= 1.0 && slope(a) > 0.0 && slope(b) < 0.0) {
    for (int i = 0; i < 100 && b - a > 1e-15; ++i) {
      const double m = 0.5 * (a + b);
      (slope(m) > 0.0 ? a : b) = m;
    }
    arg = 0.5 * (a + b);
  }
  // Pinned to an end of [0, 1] when the objective is monotone there.
  if (objective(0.0) >= objective(arg)) arg = 0.0;
  if (objective(1.0) >= objective(arg)) arg = 1.0;
  return {arg, 1.0 - arg};
}

MutualBenefitVerdict grid_mutual_search(const GameInstance& g, Mechanism mechanism,
                                        const GridSpec& spec) {
  validate(g);
  validate(spec);
  MutualBenefitVerdict v;
  v.mechanism = mechanism;
  v.route = "grid";
  const PlayerPayoffs base = player_payoffs(g, Transfer{});
  const double tol = kGainTolerance * g.total_valuation();
  auto gain = [&](const Transfer& t) { return min_gain_off_ridge(g, t, base); };

  if (mechanism != Mechanism::kJoint) {
    const Box r = feasible_range(g, mechanism);
    std::vector<double> xs = axis(r.lo, r.hi, spec);
    // Probes near zero catch windows narrower than the grid spacing.
    for (int e = 3; e <= 10; ++e) {
      const double s = (r.hi - r.lo) * std::pow(10.0, -e);
      xs.push_back(s);
      xs.push_back(-s);
    }
    std::sort(xs.begin(), xs.end());
    std::vector<double> gains(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) gains[i] = gain(along(mechanism, xs[i]));
    for (std::size_t i : local_maxima(gains, 8)) {
      double best = gains[i], arg = xs[i];
      if (!(best > tol)) {
        const double lo = i > 0 ? xs[i - 1] : xs[i];
        const double hi = i + 1 < xs.size() ? xs[i + 1] : xs[i];
        double refined;
        const double val = golden_max(
            [&](double x) { return gain(along(mechanism, x)); }, lo, hi,
            kRefineIterations, &refined);
        if (val > best) {
          best = val;
          arg = refined;
        }
      }
      if (best > tol) {
        v.exists = v.analytic = true;
        v.witness = along(mechanism, arg);
        return v;
      }
    }
    return v;
  }

  const std::vector<double> taus = axis(-g.x2, g.x1, spec);
  const std::vector<double> nus = axis(-g.phi2, g.phi1, spec);
  struct Point {
    double gain, tau, nu;
  };
  std::vector<Point> points;
  points.reserve(taus.size() * nus.size() + 2048);
  for (double tau : taus) {
    for (double nu : nus) points.push_back({gain({tau, nu}), tau, nu});
  }
  // Rays out of the origin at shrinking radii.
  constexpr int kDirections = 128;
  for (int e = 2; e <= 9; ++e) {
    const double rt = (g.x1 + g.x2) * std::pow(10.0, -e);
    const double rn = (g.phi1 + g.phi2) * std::pow(10.0, -e);
    for (int k = 0; k < kDirections; ++k) {
      const double a = 2.0 * std::numbers::pi * k / kDirections;
      const Transfer t{rt * std::cos(a), rn * std::sin(a)};
      points.push_back({gain(t), t.tau, t.nu});
    }
  }
  std::partial_sort(points.begin(), points.begin() + 8, points.end(),
                    [](const Point& a, const Point& b) { return a.gain > b.gain; });
  const double st0 = (g.x1 + g.x2) / (spec.resolution - 1);
  const double sn0 = (g.phi1 + g.phi2) / (spec.resolution - 1);
  for (int k = 0; k < 8; ++k) {
    Point p = points[k];
    double st = st0, sn = sn0;
    for (int round = 0; round < 6 && !(p.gain > tol); ++round) {
      double arg;
      golden_max([&](double t) { return gain({t, p.nu}); }, p.tau - st, p.tau + st,
                 kRefineIterations, &arg);
      p.tau = arg;
      p.gain = golden_max([&](double n) { return gain({p.tau, n}); }, p.nu - sn,
                          p.nu + sn, kRefineIterations, &arg);
      p.nu = arg;
      st *= 0.5;
      sn *= 0.5;
    }
    if (p.gain > tol) {
      v.exists = v.analytic = true;
      v.witness = Transfer{p.tau, p.nu};
      return v;
    }
  }
  return v;
}

MutualBenefitVerdict grid_mutual_search(const GameInstance& g, Mechanism mechanism) {
  return grid_mutual_search(g, mechanism,
                            mechanism == Mechanism::kJoint ? GridSpec::two_dimensional()
                                                           : GridSpec::one_dimensional());
}

double grid_max_collective(const GameInstance& g, Mechanism mechanism,
                           const GridSpec& spec) {
  validate(g);
  validate(spec);
  auto sum = [&](const Transfer& t) {
    return is_feasible(g, t) ? collective_payoff(g, t) : -kInf;
  };
  if (mechanism != Mechanism::kJoint) {
    const Box r = feasible_range(g, mechanism);
    const std::vector<double> xs = axis(r.lo, r.hi, spec);
    std::vector<double> vals(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) vals[i] = sum(along(mechanism, xs[i]));
    double best = -kInf;
    for (std::size_t i : local_maxima(vals, 4)) {
      const double lo = i > 0 ? xs[i - 1] : xs[i];
      const double hi = i + 1 < xs.size() ? xs[i + 1] : xs[i];
      double arg;
      best = std::max({best, vals[i],
                       golden_max([&](double x) { return sum(along(mechanism, x)); }, lo,
                                  hi, kRefineIterations, &arg)});
    }
    return best;
  }
  const std::vector<double> taus = axis(-g.x2, g.x1, spec);
  const std::vector<double> nus = axis(-g.phi2, g.phi1, spec);
  double best = -kInf, bt = 0.0, bn = 0.0;
  for (double tau : taus) {
    for (double nu : nus) {
      const double s = sum({tau, nu});
      if (s > best) {
        best = s;
        bt = tau;
        bn = nu;
      }
    }
  }
  double st = (g.x1 + g.x2) / (spec.resolution - 1);
  double sn = (g.phi1 + g.phi2) / (spec.resolution - 1);
  for (int round = 0; round < 4; ++round) {
    double arg;
    double val = golden_max([&](double t) { return sum({t, bn}); }, bt - st, bt + st,
                            kRefineIterations, &arg);
    if (val > best) {
      best = val;
      bt = arg;
    }
    val = golden_max([&](double n) { return sum({bt, n}); }, bn - sn, bn + sn,
                     kRefineIterations, &arg);
    if (val > best) {
      best = val;
      bn = arg;
    }
    st *= 0.5;
    sn *= 0.5;
  }
  return best;
}

double grid_max_collective(const GameInstance& g, Mechanism mechanism) {
  return grid_max_collective(g, mechanism,
                             mechanism == Mechanism::kJoint ? GridSpec::two_dimensional()
                                                            : GridSpec::one_dimensional());
}

}  // namespace lotto
