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

#include "lotto/mutual.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace lotto {
namespace {

double sq(double v) { return v * v; }

// Everything the contest-transfer conditions need for a game oriented
// x1/phi1 <= x2/phi2.
struct OrientedGame {
  double p1, p2, x1, x2;
  Thresholds t;
  Region region;
  CaseIndex source;
  double scale;  // phi1 + phi2
  double slack;  // absolute window slack
};

class FormBuilder {
 public:
  FormBuilder(const OrientedGame& g, const MutualOptions& opts)
      : g_(g), opts_(opts) {}

  bool literal(TypoSite site) const { return opts_.reading.is_literal(site); }

  // a < b with the configured relative slack.
  bool less(double a, double b) const {
    return b - a > opts_.window_slack * std::max({std::abs(a), std::abs(b), 1e-300});
  }

  FormResult windows(std::string id, std::string transition,
                     std::initializer_list<Interval> candidates) const {
    FormResult r{std::move(id), std::move(transition), false, {0.0, 0.0}};
    for (const Interval& c : candidates) {
      const Interval w = intersect(c, Interval{0.0, g_.p1});
      if (w.width() > g_.slack && (!r.fires || w.width() > r.window.width())) {
        r.fires = true;
        r.window = w;
      }
    }
    return r;
  }

  FormResult inequality(std::string id, std::string transition, bool holds,
                        Interval witness) const {
    FormResult r{std::move(id), std::move(transition), holds,
                 intersect(witness, Interval{0.0, g_.p1})};
    return r;
  }

  // The window of a nu^2 + b nu + c < 0, or nothing when d <= 0.
  static std::optional<QuadraticWindow> quad(double a, double b, double c) {
    QuadraticWindow w = quadratic_window(a, b, c);
    if (!w.has_roots()) return std::nullopt;
    return w;
  }

  const OrientedGame& g() const { return g_; }

 private:
  const OrientedGame& g_;
  const MutualOptions& opts_;
};

constexpr Interval kNone{0.0, 0.0};

// Quadratic windows shared between regions.
struct Windows {
  std::optional<QuadraticWindow> q3, q4, q5, q6, q7, q8, q9, q10, q11, q12, q13, q14;
};

Windows build_windows(const FormBuilder& fb) {
  const OrientedGame& g = fb.g();
  const double p1 = g.p1, p2 = g.p2, x1 = g.x1, x2 = g.x2;
  const double x12 = x1 * x2;
  Windows w;
  // U1 up when leaving Case 1 (1<=2) for Case 2 (1<=2).
  w.q3 = FormBuilder::quad(1.0, p2 - p1, x12 * p1 * p1 - p1 * p2);
  // U2 up in the same transition when x2 < 1/2.
  w.q4 = FormBuilder::quad(sq(1.0 - 2.0 * x2) + x12,
                           2.0 * (1.0 - 2.0 * x2) * p2 + x12 * (p2 - p1),
                           p2 * p2 - x12 * p1 * p2);
  // Case 1 (1<=2) -> Case 2 (1>2), U1 then U2.
  w.q5 = FormBuilder::quad(sq(1.0 - 2.0 * x1) + x12,
                           x12 * (p2 - p1) - 2.0 * sq(x1 - 1.0) * (1.0 - 2.0 * x1) * p1,
                           sq(sq(x1 - 1.0)) * p1 * p1 - x12 * p1 * p2);
  w.q6 = FormBuilder::quad(1.0, p2 - p1, 4.0 * (x1 / x2) * p2 * p2 - p1 * p2);
  // Case 2 (1<=2) -> Case 2 (1>2).
  {
    const double product =
        fb.literal(TypoSite::kB7C7PhiSquared) ? p2 * p2 : p1 * p2;
    const double m = x1 * std::sqrt(x1 * product / x2) - (2.0 * x1 - 1.0) * p1;
    w.q7 = FormBuilder::quad(sq(2.0 * x1 - 1.0) + x12,
                             2.0 * (2.0 * x1 - 1.0) * m + x12 * (p2 - p1),
                             m * m - x12 * p1 * p2);
    const double inner = (2.0 - 1.0 / x2) * p2 + std::sqrt(x1 * p1 * p2 / x2);
    w.q8 = FormBuilder::quad(1.0, p2 - p1, (x1 / x2) * inner * inner - p1 * p2);
  }
  // Case 1 (1<=2) -> Case 3 (either orientation).
  w.q9 = FormBuilder::quad(1.0 + x1 / x2, p2 - p1, -p1 * p2);
  w.q10 = FormBuilder::quad(1.0 + x2 / x1, (x1 + 2.0 * x2 - 4.0) / x1 * p2 - p1,
                            sq(2.0 - x2) * p2 * p2 / x12 - p1 * p2);
  // Case 2 (1<=2) -> Case 3 (either orientation).
  {
    const double root = std::sqrt(p1 * p2 / x12);
    w.q11 = FormBuilder::quad(1.0 + x2 / x1,
                              2.0 * root + (x2 / x1) * (p2 - p1) - 2.0 * p1,
                              sq(root - p1) - (x2 / x1) * p1 * p2);
    const double b2 = g.t.beta2;
    w.q12 = FormBuilder::quad(1.0 + x1 / x2, -2.0 * b2 + (x1 / x2) * (p2 - p1),
                              b2 * b2 - (x1 / x2) * p1 * p2);
  }
  // Case 3 (1<=2) -> Case 2 (1>2).
  {
    const double n = sq(x1 - 1.0) / x1 * p1 + std::sqrt(p1 * p2 * x12);
    w.q13 = FormBuilder::quad(1.0 + (x1 / x2) * sq(2.0 - 1.0 / x1),
                              (4.0 * x1 - 2.0) / x2 * n + p2 - p1,
                              (x1 / x2) * n * n - p1 * p2);
    const double bracket = x2 * p2 + std::sqrt(x12 * p1 * p2);
    const double c14 = fb.literal(TypoSite::kC14Form)
                           ? (x1 / x2) * (bracket - p1 * p2)
                           : (x1 / x2) * bracket * bracket - p1 * p2;
    w.q14 = FormBuilder::quad(1.0, p2 - p1, c14);
  }
  return w;
}

// max{lowers, z-} < min{uppers, z+} over the given windows; kNone if any
// window is missing.
Interval window_bound(std::initializer_list<const std::optional<QuadraticWindow>*> qs,
                      std::initializer_list<double> lowers,
                      std::initializer_list<double> uppers) {
  Interval out = bounded_by(lowers, uppers);
  for (const auto* q : qs) {
    if (!q->has_value()) return kNone;
    out = intersect(out, (*q)->interval());
  }
  return out;
}

// Case 1 (1<=2) -> Case 2 (1<=2), upper bound `upper` (alpha1 in Region 4,
// alpha4 in Region 5).
FormResult form_c1_to_c2_le(const FormBuilder& fb, const Windows& w,
                            std::string id, double upper) {
  const OrientedGame& g = fb.g();
  const std::string tr = "C1_1le2->C2_1le2";
  if (g.x2 >= 0.5) {
    return fb.windows(std::move(id), tr, {window_bound({&w.q3}, {g.t.alpha3}, {upper})});
  }
  return fb.windows(std::move(id), tr,
                    {window_bound({&w.q3, &w.q4}, {g.t.alpha3}, {upper})});
}

FormResult form_c1_to_c1_gt_lowbudget(const FormBuilder& fb, std::string id) {
  // Case 1 (1<=2) -> Case 1 (1>2) with x1, x2 < 1.
  const OrientedGame& g = fb.g();
  const double r = g.p2 / g.p1;
  const double lhs = (g.x1 * g.x2 - 2.0 * g.x2 + 1.0) / (2.0 * g.x2);
  const double rhs = (2.0 - g.x1) * g.x2 / (2.0 * (2.0 - g.x2));
  return fb.inequality(std::move(id), "C1_1le2->C1_1gt2",
                       fb.less(lhs, r) && fb.less(r, rhs),
                       bounded_by({g.t.alpha2, g.t.beta1}, {g.p1 * (2.0 - g.x1) / 2.0}));
}

FormResult form_c2_to_c1_gt(const FormBuilder& fb, std::string id, TypoSite site) {
  const OrientedGame& g = fb.g();
  const double product = fb.literal(site) ? g.p2 * g.p2 : g.p1 * g.p2;
  const double upper = g.p1 - 0.5 * std::sqrt(g.x1 * product / g.x2);
  const double lower = std::max(g.t.alpha2, g.t.beta2);
  return fb.inequality(std::move(id), "C2_1le2->C1_1gt2", fb.less(lower, upper),
                       {lower, upper});
}

std::vector<FormResult> region_forms(const FormBuilder& fb) {
  const OrientedGame& g = fb.g();
  const Thresholds& t = g.t;
  const double p1 = g.p1, p2 = g.p2, x1 = g.x1, x2 = g.x2;
  const double r = p2 / p1;
  const Windows w = build_windows(fb);
  std::vector<FormResult> out;

  switch (g.region) {
    case Region::kR1:
      if (g.source == CaseIndex::kCase1) {
        const double lhs = (2.0 * x1 * x2 - x1 - x2) / (2.0 * x1 * x1);
        const double rhs = (2.0 * x2 - 1.0) / (2.0 * x1);
        out.push_back(fb.inequality(
            "1.1", "C1_1le2->C1_1gt2", fb.less(lhs, r) && fb.less(r, rhs),
            bounded_by({t.alpha1, p2 / (2.0 * x2 - 1.0)}, {p1 / (2.0 * x1)})));
      }
      break;

    case Region::kR2:
      if (g.source == CaseIndex::kCase1) {
        const double c2 = 4.0 * (x1 / x2) * p2 * p2 -
                          (fb.literal(TypoSite::kC2ExtraFactor) ? 4.0 : 1.0) * p1 * p2;
        const auto q1 = FormBuilder::quad(1.0 + sq(2.0 * x1 - 1.0) / (x1 * x2), p2 - p1,
                                          -p1 * p2);
        const auto q2 = FormBuilder::quad(1.0, p2 - p1, c2);
        out.push_back(fb.windows("2.1", "C1_1le2->C2_1gt2",
                                 {window_bound({&q1, &q2}, {t.alpha1}, {t.alpha2})}));
        const double lhs = (-x1 * x2 + 2.0 * x1 - 1.0) / (2.0 * x1 * x1 * x2);
        const double rhs = x2 / (2.0 * x1 * (2.0 - x2));
        out.push_back(fb.inequality("2.2", "C1_1le2->C1_1gt2",
                                    fb.less(lhs, r) && fb.less(r, rhs),
                                    bounded_by({t.alpha2, t.beta1}, {p1 / (2.0 * x1)})));
      }
      break;

    case Region::kR3:
      if (g.source == CaseIndex::kCase1) {
        out.push_back(fb.windows("3.1", "C1_1le2->C2_1le2",
                                 {window_bound({&w.q3}, {t.alpha3}, {t.alpha1})}));
        const double lhs = 0.5 * (x1 + x2 - 2.0);
        const double rhs = 0.5 * (2.0 - x1) * (2.0 * x2 - 1.0);
        out.push_back(fb.inequality(
            "3.2", "C1_1le2->C1_1gt2", fb.less(lhs, r) && fb.less(r, rhs),
            bounded_by({t.alpha1, p2 / (2.0 * x2 - 1.0)}, {p1 * (2.0 - x1) / 2.0})));
      } else if (g.source == CaseIndex::kCase2) {
        const double product =
            fb.literal(TypoSite::kForm33PhiSquared) ? p2 * p2 : p1 * p2;
        const double upper = p1 - 0.5 * std::sqrt(x1 * product / x2);
        const double lower =
            std::max(t.alpha1, std::sqrt(x1 * x2 * p1 * p2) / (2.0 * x2 - 1.0));
        out.push_back(fb.inequality("3.3", "C2_1le2->C1_1gt2", fb.less(lower, upper),
                                    {lower, upper}));
      }
      break;

    case Region::kR4:
      if (g.source == CaseIndex::kCase1) {
        out.push_back(form_c1_to_c2_le(fb, w, "4.1", t.alpha1));
        out.push_back(fb.windows("4.2", "C1_1le2->C2_1gt2",
                                 {window_bound({&w.q5, &w.q6}, {t.alpha1}, {t.alpha2})}));
        out.push_back(form_c1_to_c1_gt_lowbudget(fb, "4.3"));
      } else if (g.source == CaseIndex::kCase2) {
        out.push_back(fb.windows("4.4", "C2_1le2->C2_1gt2",
                                 {window_bound({&w.q7, &w.q8}, {t.alpha1}, {t.alpha2})}));
        out.push_back(form_c2_to_c1_gt(fb, "4.5", TypoSite::kForm45PhiSquared));
      }
      break;

    case Region::kR5: {
      const bool shifted = fb.literal(TypoSite::kRegion5SourceCase);
      if (g.source == CaseIndex::kCase1) {
        out.push_back(form_c1_to_c2_le(fb, w, "5.1", t.alpha4));
        out.push_back(fb.windows(
            "5.2", "C1_1le2->C3_1le2",
            {window_bound({&w.q9}, {t.beta1, t.alpha4}, {t.alpha1}),
             window_bound({&w.q9, &w.q10}, {t.alpha4}, {t.beta1, t.alpha1})}));
        out.push_back(fb.windows(
            "5.3", "C1_1le2->C3_1gt2",
            {window_bound({&w.q9}, {t.beta1, t.alpha1}, {t.alpha5}),
             window_bound({&w.q9, &w.q10}, {t.alpha1}, {t.beta1, t.alpha5})}));
        out.push_back(fb.windows("5.4", "C1_1le2->C2_1gt2",
                                 {window_bound({&w.q5, &w.q6}, {t.alpha5}, {t.alpha2})}));
        out.push_back(form_c1_to_c1_gt_lowbudget(fb, "5.5"));
      }
      const bool c3_forms = shifted ? g.source == CaseIndex::kCase2
                                    : g.source == CaseIndex::kCase3;
      if (g.source == CaseIndex::kCase2) {
        out.push_back(fb.windows(
            "5.6", "C2_1le2->C3_1le2",
            {window_bound({&w.q11}, {t.beta2, t.alpha4}, {t.alpha1}),
             window_bound({&w.q11, &w.q12}, {t.alpha4}, {t.beta2, t.alpha1})}));
        out.push_back(fb.windows(
            "5.7", "C2_1le2->C3_1gt2",
            {window_bound({&w.q11}, {t.beta2, t.alpha1}, {t.alpha5}),
             window_bound({&w.q11, &w.q12}, {t.alpha1}, {t.beta2, t.alpha5})}));
        out.push_back(fb.windows("5.8", "C2_1le2->C2_1gt2",
                                 {window_bound({&w.q7, &w.q8}, {t.alpha5}, {t.alpha2})}));
        out.push_back(form_c2_to_c1_gt(fb, "5.9", TypoSite::kForm45PhiSquared));
      }
      if (g.source == CaseIndex::kCase3) {
        // Crossing the ridge from Case 3 always lowers Player 1's payoff.
        out.push_back(FormResult{"5.10", "C3_1le2->C3_1gt2", false, kNone});
      }
      if (c3_forms) {
        out.push_back(fb.windows("5.11", "C3_1le2->C2_1gt2",
                                 {window_bound({&w.q13, &w.q14}, {t.alpha5}, {t.alpha2})}));
        const double upper = p1 * (1.0 - x1 / 2.0) - 0.5 * std::sqrt(x1 * x2 * p1 * p2);
        const double lower = std::max(std::sqrt(x1 * p1 * p2 / x2), t.alpha2);
        out.push_back(fb.inequality("5.12", "C3_1le2->C1_1gt2", fb.less(lower, upper),
                                    {lower, upper}));
      }
      break;
    }
  }
  return out;
}

OrientedGame orient(const GameInstance& g, const MutualOptions& opts) {
  const CaseLabel label = classify_case(g, opts.case_eps);
  if (label.orientation == Orientation::kOneGtTwo) {
    throw std::invalid_argument("contest conditions need x1/phi1 <= x2/phi2");
  }
  OrientedGame o{g.phi1, g.phi2, g.x1, g.x2, thresholds(g), classify_region(g),
                 label.index, g.total_valuation(), 0.0};
  o.slack = opts.window_slack * o.scale;
  return o;
}

bool analytic_oriented(const GameInstance& og, const MutualOptions& opts) {
  if (classify_case(og, opts.case_eps).index == CaseIndex::kCase4) return false;
  if (sc_contest_form(og, opts).fires) return true;
  for (const FormResult& f : si_contest_forms(og, opts)) {
    if (f.fires) return true;
  }
  return false;
}

// Finds a validated nu inside `window` (oriented coordinates); `sign` maps
// back to the caller's game.
std::optional<Transfer> place_contest_witness(const GameInstance& g, double sign,
                                              const Interval& window,
                                              const PlayerPayoffs& base,
                                              const MutualOptions& opts,
                                              bool prefer_small) {
  if (window.empty()) return std::nullopt;
  auto gain_at = [&](double nu) {
    return min_gain_off_ridge(g, Transfer{0.0, sign * nu}, base, opts.case_eps);
  };
  const double tol = kGainTolerance * g.total_valuation();
  if (prefer_small) {
    // Case-preserving transfers: improvement starts right at nu = 0.
    double nu = window.midpoint();
    for (int i = 0; i < 80 && nu > window.lo; ++i, nu *= 0.5) {
      if (gain_at(nu) > tol) return Transfer{0.0, sign * nu};
    }
  } else {
    const double mid = window.midpoint();
    if (gain_at(mid) > tol) return Transfer{0.0, sign * mid};
  }
  // Midpoint failed validation: take the best interior sample.
  constexpr int kSamples = 64;
  double best = -kInf;
  double best_nu = 0.0;
  for (int k = 1; k < kSamples; ++k) {
    const double nu = window.lo + window.width() * k / kSamples;
    const double gain = gain_at(nu);
    if (gain > best) {
      best = gain;
      best_nu = nu;
    }
  }
  if (best > tol) return Transfer{0.0, sign * best_nu};
  return std::nullopt;
}

bool contest_near_boundary(const GameInstance& g, bool verdict,
                           const MutualOptions& opts) {
  const double d = opts.boundary_distance;
  const std::array<double GameInstance::*, 4> fields{
      &GameInstance::phi1, &GameInstance::phi2, &GameInstance::x1, &GameInstance::x2};
  for (auto field : fields) {
    for (double f : {1.0 - d, 1.0 + d}) {
      GameInstance p = g;
      p.*field *= f;
      if (contest_condition_holds(p, opts) != verdict) return true;
    }
  }
  return false;
}

// Golden-section maximization of f on [lo, hi].
template <typename F>
double golden_max(F&& f, double lo, double hi, int iterations, double* arg) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  if (fc >= fd) {
    *arg = c;
    return fc;
  }
  *arg = d;
  return fd;
}

// The ratio-equalizing transfers, which land on the ridge.
Transfer ridge_contest_transfer(const GameInstance& g) {
  return {0.0, (g.x2 * g.phi1 - g.x1 * g.phi2) / (g.x1 + g.x2)};
}
Transfer ridge_budget_transfer(const GameInstance& g) {
  return {(g.x1 * g.phi2 - g.x2 * g.phi1) / (g.phi1 + g.phi2), 0.0};
}

// Mutual improvement at a ridge transfer under the canonical split.
bool ridge_improves(const GameInstance& g, const Transfer& t, const MutualOptions& opts) {
  const PlayerPayoffs base = player_payoffs(g, Transfer{}, opts.case_eps);
  return min_gain(g, t, base, opts.case_eps) > kGainTolerance * g.total_valuation();
}

}  // namespace

std::string to_string(Region r) { return "R" + std::to_string(static_cast<int>(r)); }

Region classify_region(const GameInstance& g) {
  validate(g);
  if (g.x1 >= 1.0 && g.x2 >= 1.0) return Region::kR1;
  if (g.x1 >= 1.0) return Region::kR2;
  if (g.x2 >= 1.0) return Region::kR3;
  if (g.x1 + g.x2 >= 1.0) return Region::kR4;
  return Region::kR5;
}

std::string to_string(Mechanism m) {
  switch (m) {
    case Mechanism::kBudget:
      return "budget";
    case Mechanism::kContest:
      return "contest";
    case Mechanism::kJoint:
      return "joint";
  }
  return "unknown";
}

std::optional<Mechanism> parse_mechanism(std::string_view text) {
  if (text == "budget") return Mechanism::kBudget;
  if (text == "contest") return Mechanism::kContest;
  if (text == "joint") return Mechanism::kJoint;
  return std::nullopt;
}

Thresholds thresholds(const GameInstance& g) {
  const double p1 = g.phi1, p2 = g.phi2, x1 = g.x1, x2 = g.x2;
  const double x12 = x1 * x2;
  Thresholds t;
  t.alpha1 = (x2 * p1 - x1 * p2) / (x1 + x2);
  t.alpha2 = (p1 - x12 * p2) / (x12 + 1.0);
  t.alpha3 = (x12 * p1 - p2) / (x12 + 1.0);
  t.alpha4 = (x12 * p1 - sq(1.0 - x2) * p2) / (sq(1.0 - x2) + x12);
  t.alpha5 = (sq(1.0 - x1) * p1 - x12 * p2) / (sq(1.0 - x1) + x12);
  t.beta1 = (2.0 - x2) / x2 * p2;
  t.beta2 = std::sqrt(x1 * p1 * p2 / (x2 * x2 * x2)) - sq(1.0 - x2) / (x2 * x2) * p2;
  return t;
}

std::string_view to_string(TypoSite site) {
  switch (site) {
    case TypoSite::kC2ExtraFactor:
      return "c2-factor";
    case TypoSite::kForm33PhiSquared:
      return "form3.3-phi2phi2";
    case TypoSite::kB7C7PhiSquared:
      return "b7c7-phi2phi2";
    case TypoSite::kForm45PhiSquared:
      return "form4.5-phi2phi2";
    case TypoSite::kC14Form:
      return "c14-square";
    case TypoSite::kRegion5SourceCase:
      return "region5-source-case";
  }
  return "unknown";
}

std::optional<TypoSite> parse_typo_site(std::string_view text) {
  for (unsigned i = 0; i < kTypoSiteCount; ++i) {
    const auto site = static_cast<TypoSite>(i);
    if (to_string(site) == text) return site;
  }
  return std::nullopt;
}

double min_gain(const GameInstance& g, const Transfer& t, const PlayerPayoffs& baseline,
                double eps) {
  if (!is_feasible(g, t)) return -kInf;
  const PlayerPayoffs p = player_payoffs(g, t, eps);
  return std::min(p.u1 - baseline.u1, p.u2 - baseline.u2);
}

bool lands_on_ridge(const GameInstance& g, const Transfer& t, double eps) {
  if (!is_feasible(g, t)) return false;
  return classify_case(post_transfer(g, t), eps).index == CaseIndex::kCase4 &&
         classify_case(g, eps).index != CaseIndex::kCase4;
}

double min_gain_off_ridge(const GameInstance& g, const Transfer& t,
                          const PlayerPayoffs& baseline, double eps) {
  if (lands_on_ridge(g, t, eps)) return -kInf;
  return min_gain(g, t, baseline, eps);
}

bool mutually_improves(const GameInstance& g, const Transfer& t,
                       const PlayerPayoffs& baseline, double eps) {
  return min_gain(g, t, baseline, eps) > kGainTolerance * g.total_valuation();
}

FormResult sc_contest_form(const GameInstance& g, const MutualOptions& opts) {
  const OrientedGame o = orient(g, opts);
  const FormBuilder fb(o, opts);
  const double p1 = o.p1, p2 = o.p2, x1 = o.x1, x2 = o.x2;
  if (o.source == CaseIndex::kCase2) {
    const bool holds = p1 > p2 && fb.less((2.0 - 4.0 * x2) / (p1 - p2),
                                          std::sqrt(x1 * x2 / (p1 * p2)));
    const double upper = x2 < 1.0 ? std::min(o.t.alpha1, o.t.alpha4) : o.t.alpha1;
    return fb.inequality("SC2", "C2_1le2->C2_1le2", holds, {0.0, upper});
  }
  if (o.source == CaseIndex::kCase3) {
    const bool holds = p1 > p2 && fb.less(4.0 * p1 * p2 / sq(p1 - p2) * x1, x2);
    return fb.inequality("SC3", "C3_1le2->C3_1le2", holds, {0.0, o.t.alpha1});
  }
  // Player 1 loses on every case-preserving transfer in Case 1; Case 4 is
  // already collectively optimal.
  return FormResult{"SC", "", false, kNone};
}

std::vector<FormResult> si_contest_forms(const GameInstance& g,
                                         const MutualOptions& opts) {
  const OrientedGame o = orient(g, opts);
  if (o.source == CaseIndex::kCase4) return {};
  return region_forms(FormBuilder(o, opts));
}

namespace {

MutualBenefitVerdict verdict_from_forms(const GameInstance& og,
                                        const std::vector<FormResult>& forms,
                                        const MutualOptions& opts, bool prefer_small) {
  MutualBenefitVerdict v;
  v.mechanism = Mechanism::kContest;
  const PlayerPayoffs base = player_payoffs(og, Transfer{}, opts.case_eps);
  for (const FormResult& f : forms) {
    if (!f.fires) continue;
    if (!v.analytic) {
      v.analytic = true;
      v.route = f.id;
      v.transition = f.transition;
    }
    if (auto w = place_contest_witness(og, 1.0, f.window, base, opts, prefer_small)) {
      v.exists = true;
      v.witness = w;
      v.route = f.id;
      v.transition = f.transition;
      return v;
    }
  }
  return v;
}

}  // namespace

MutualBenefitVerdict sc_contest_exists(const GameInstance& g, const MutualOptions& opts) {
  return verdict_from_forms(g, {sc_contest_form(g, opts)}, opts, true);
}

MutualBenefitVerdict si_contest_exists(const GameInstance& g, const MutualOptions& opts) {
  return verdict_from_forms(g, si_contest_forms(g, opts), opts, false);
}

bool contest_condition_holds(const GameInstance& g, const MutualOptions& opts) {
  const CaseLabel label = classify_case(g, opts.case_eps);
  if (label.index == CaseIndex::kCase4) return false;
  const GameInstance og =
      label.orientation == Orientation::kOneGtTwo ? swap_indices(g) : g;
  return analytic_oriented(og, opts);
}

MutualBenefitVerdict contest_mutual_exists(const GameInstance& g,
                                           const MutualOptions& opts) {
  const CaseLabel label = classify_case(g, opts.case_eps);
  MutualBenefitVerdict v;
  v.mechanism = Mechanism::kContest;
  if (label.index == CaseIndex::kCase4) {
    v.route = "C4";
    v.case4_dependent = true;
    v.near_boundary = contest_near_boundary(g, false, opts);
    return v;
  }
  const bool swapped = label.orientation == Orientation::kOneGtTwo;
  const GameInstance og = swapped ? swap_indices(g) : g;
  MutualBenefitVerdict sc = sc_contest_exists(og, opts);
  MutualBenefitVerdict si = sc.exists ? MutualBenefitVerdict{} : si_contest_exists(og, opts);
  const MutualBenefitVerdict& pick = sc.exists ? sc : (si.exists || si.analytic ? si : sc);
  v = pick;
  v.mechanism = Mechanism::kContest;
  v.analytic = sc.analytic || si.analytic;
  if (v.witness && swapped) v.witness->nu = -v.witness->nu;
  v.case4_dependent = !v.exists && ridge_improves(g, ridge_contest_transfer(g), opts);
  if (swapped && !v.route.empty()) v.route += "/swapped";
  v.near_boundary = contest_near_boundary(g, v.analytic, opts);
  return v;
}

MutualBenefitVerdict budget_mutual_exists(const GameInstance& g, const MutualOptions& opts) {
  validate(g);
  MutualBenefitVerdict v;
  v.mechanism = Mechanism::kBudget;
  const bool on_ridge = classify_case(g, opts.case_eps).index == CaseIndex::kCase4;
  const PlayerPayoffs base = player_payoffs(g, Transfer{}, opts.case_eps);
  const double tol = kGainTolerance * g.total_valuation();
  auto gain_at = [&](double tau) {
    return min_gain_off_ridge(g, Transfer{tau, 0.0}, base, opts.case_eps);
  };

  const int n = std::max(opts.budget_scan_points, 3);
  const double lo = -g.x2, hi = g.x1, span = hi - lo;
  std::vector<double> taus;
  taus.reserve(n + 20);
  for (int k = 1; k <= n; ++k) taus.push_back(lo + span * k / (n + 1));
  // Probes close to zero catch windows narrower than the scan spacing.
  for (int e = 3; e <= 9; ++e) {
    const double s = span * std::pow(10.0, -e);
    taus.push_back(s);
    taus.push_back(-s);
  }
  std::size_t best = 0;
  double best_gain = -kInf;
  for (std::size_t k = 0; k < taus.size(); ++k) {
    const double gain = gain_at(taus[k]);
    if (gain > best_gain) {
      best_gain = gain;
      best = k;
    }
  }
  double witness = taus[best];
  if (!(best_gain > tol)) {
    const double step = span / (n + 1);
    const double a = std::max(lo + 1e-12 * span, taus[best] - step);
    const double b = std::min(hi - 1e-12 * span, taus[best] + step);
    best_gain = golden_max(gain_at, a, b, opts.refine_iterations, &witness);
  }
  if (best_gain > tol) {
    v.exists = v.analytic = true;
    v.witness = Transfer{witness, 0.0};
    v.route = "scan";
  }
  v.case4_dependent =
      on_ridge || (!v.exists && ridge_improves(g, ridge_budget_transfer(g), opts));
  return v;
}

MutualBenefitVerdict joint_mutual_exists(const GameInstance& g, const MutualOptions& opts) {
  validate(g);
  MutualBenefitVerdict v;
  v.mechanism = Mechanism::kJoint;
  const bool on_ridge = classify_case(g, opts.case_eps).index == CaseIndex::kCase4;
  const PlayerPayoffs base = player_payoffs(g, Transfer{}, opts.case_eps);
  const double tol = kGainTolerance * g.total_valuation();

  // Stage 1: central-difference gradients at the origin.
  const double h = opts.gradient_step;
  auto payoffs = [&](double tau, double nu) {
    return player_payoffs(g, Transfer{tau, nu}, opts.case_eps);
  };
  const PlayerPayoffs tp = payoffs(h, 0.0), tm = payoffs(-h, 0.0);
  const PlayerPayoffs np = payoffs(0.0, h), nm = payoffs(0.0, -h);
  const double g1t = (tp.u1 - tm.u1) / (2 * h), g1n = (np.u1 - nm.u1) / (2 * h);
  const double g2t = (tp.u2 - tm.u2) / (2 * h), g2n = (np.u2 - nm.u2) / (2 * h);
  const double n1 = std::hypot(g1t, g1n), n2 = std::hypot(g2t, g2n);
  if (n1 > 0.0 && n2 > 0.0) {
    const double cross = g1t * g2n - g1n * g2t;
    const double dot = g1t * g2t + g1n * g2n;
    const bool antiparallel = std::abs(cross) <= opts.antiparallel_tol * n1 * n2 && dot < 0;
    if (!antiparallel) {
      double dt = g1t / n1 + g2t / n2, dn = g1n / n1 + g2n / n2;
      const double dn_norm = std::hypot(dt, dn);
      dt /= dn_norm;
      dn /= dn_norm;
      double step = 0.1 * std::min({g.x1, g.x2, g.phi1, g.phi2});
      for (int i = 0; i < 60; ++i, step *= 0.5) {
        const Transfer t{step * dt, step * dn};
        if (min_gain_off_ridge(g, t, base, opts.case_eps) > tol) {
          v.exists = v.analytic = true;
          v.witness = t;
          v.route = "gradient";
          return v;
        }
      }
    }
  }

  // Stage 2: grid over the feasible rectangle, refined by coordinate search.
  const int n = std::max(opts.joint_grid, 3);
  double best = -kInf, bt = 0.0, bn = 0.0;
  for (int i = 1; i <= n; ++i) {
    const double tau = -g.x2 + (g.x1 + g.x2) * i / (n + 1);
    for (int j = 1; j <= n; ++j) {
      const double nu = -g.phi2 + (g.phi1 + g.phi2) * j / (n + 1);
      const double gain = min_gain_off_ridge(g, Transfer{tau, nu}, base, opts.case_eps);
      if (gain > best) {
        best = gain;
        bt = tau;
        bn = nu;
      }
    }
  }
  double st = (g.x1 + g.x2) / (n + 1), sn = (g.phi1 + g.phi2) / (n + 1);
  for (int round = 0; round < 4 && !(best > tol); ++round) {
    double arg;
    best = golden_max(
        [&](double tau) { return min_gain_off_ridge(g, Transfer{tau, bn}, base, opts.case_eps); },
        bt - st, bt + st, opts.refine_iterations, &arg);
    bt = arg;
    best = golden_max(
        [&](double nu) { return min_gain_off_ridge(g, Transfer{bt, nu}, base, opts.case_eps); },
        bn - sn, bn + sn, opts.refine_iterations, &arg);
    bn = arg;
    st *= 0.5;
    sn *= 0.5;
  }
  if (best > tol) {
    v.exists = v.analytic = true;
    v.witness = Transfer{bt, bn};
    v.route = "grid";
  }
  v.case4_dependent = on_ridge || ridge_improves(g, ridge_budget_transfer(g), opts) ||
                      ridge_improves(g, ridge_contest_transfer(g), opts);
  return v;
}

MutualBenefitVerdict mutual_exists(const GameInstance& g, Mechanism m,
                                   const MutualOptions& opts) {
  switch (m) {
    case Mechanism::kBudget:
      return budget_mutual_exists(g, opts);
    case Mechanism::kContest:
      return contest_mutual_exists(g, opts);
    case Mechanism::kJoint:
      return joint_mutual_exists(g, opts);
  }
  throw std::invalid_argument("unknown mechanism");
}

}  // namespace lotto
