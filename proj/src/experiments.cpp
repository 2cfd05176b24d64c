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

#include "lotto/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

#include "lotto/collective.hpp"
#include "lotto/oracle.hpp"

namespace lotto {
namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v == 0.0 ? 0.0 : v);
  return buf;
}

const char* flag(bool b) { return b ? "1" : "0"; }

constexpr std::string_view kValueUnit = "value";
constexpr std::string_view kBudgetUnit = "adversary-budgets";

std::string_view unit(Parameter p) {
  return p == Parameter::kPhi1 || p == Parameter::kPhi2 ? kValueUnit : kBudgetUnit;
}

// "phi1[value;fixed],...,x2[adversary-budgets;swept]".
std::string game_header(const std::array<bool, 4>& swept) {
  std::string out;
  for (int i = 0; i < 4; ++i) {
    const auto p = static_cast<Parameter>(i);
    if (i) out += ',';
    out += std::string(to_string(p)) + "[" + std::string(unit(p)) + ";" +
           (swept[i] ? "swept" : "fixed") + "]";
  }
  return out;
}

std::string game_cells(const GameInstance& g) {
  return num(g.phi1) + "," + num(g.phi2) + "," + num(g.x1) + "," + num(g.x2);
}

std::string_view predicate_unit(SweepPredicate p) {
  switch (p) {
    case SweepPredicate::kCase:
    case SweepPredicate::kRegion:
      return "label";
    case SweepPredicate::kCollectiveGain:
      return kValueUnit;
    default:
      return "bool";
  }
}

double parse_double(std::string_view text, std::string_view what) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ValidationError("invalid number for " + std::string(what) + ": '" + s + "'");
  }
  return v;
}

}  // namespace

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform(double lo, double hi) {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

GameInstance sample_game(SplitMix64& rng, double lo, double hi) {
  GameInstance g;
  g.phi1 = rng.uniform(lo, hi);
  g.phi2 = rng.uniform(lo, hi);
  g.x1 = rng.uniform(lo, hi);
  g.x2 = rng.uniform(lo, hi);
  return g;
}

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i; !failed && (i = next.fetch_add(1)) < n;) {
      try {
        fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::string_view to_string(Parameter p) {
  switch (p) {
    case Parameter::kPhi1:
      return "phi1";
    case Parameter::kPhi2:
      return "phi2";
    case Parameter::kX1:
      return "x1";
    case Parameter::kX2:
      return "x2";
  }
  return "unknown";
}

std::optional<Parameter> parse_parameter(std::string_view text) {
  for (int i = 0; i < 4; ++i) {
    if (to_string(static_cast<Parameter>(i)) == text) return static_cast<Parameter>(i);
  }
  return std::nullopt;
}

double& parameter_ref(GameInstance& g, Parameter p) {
  switch (p) {
    case Parameter::kPhi1:
      return g.phi1;
    case Parameter::kPhi2:
      return g.phi2;
    case Parameter::kX1:
      return g.x1;
    case Parameter::kX2:
      return g.x2;
  }
  throw ValidationError("unknown parameter");
}

std::string_view to_string(SweepPredicate p) {
  switch (p) {
    case SweepPredicate::kMutualBudget:
      return "mutual-budget";
    case SweepPredicate::kMutualContest:
      return "mutual-contest";
    case SweepPredicate::kMutualJoint:
      return "mutual-joint";
    case SweepPredicate::kCase:
      return "case";
    case SweepPredicate::kRegion:
      return "region";
    case SweepPredicate::kCollectiveGain:
      return "collective-gain";
  }
  return "unknown";
}

std::optional<SweepPredicate> parse_sweep_predicate(std::string_view text) {
  for (int i = 0; i <= static_cast<int>(SweepPredicate::kCollectiveGain); ++i) {
    const auto p = static_cast<SweepPredicate>(i);
    if (to_string(p) == text) return p;
  }
  return std::nullopt;
}

SweepAxis parse_axis(std::string_view text) {
  std::vector<std::string_view> parts;
  for (std::size_t start = 0;;) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 4) {
    throw ValidationError("axis must look like name:lo:hi:steps, got '" + std::string(text) +
                          "'");
  }
  const auto p = parse_parameter(parts[0]);
  if (!p) throw ValidationError("invalid axis name '" + std::string(parts[0]) + "'");
  SweepAxis axis;
  axis.parameter = *p;
  axis.lo = parse_double(parts[1], "axis lower bound");
  axis.hi = parse_double(parts[2], "axis upper bound");
  const double steps = parse_double(parts[3], "axis steps");
  if (steps != std::floor(steps) || steps > 1e7) {
    throw ValidationError("axis steps must be an integer");
  }
  axis.steps = static_cast<int>(steps);
  return axis;
}

void validate(const SweepSpec& spec) {
  if (spec.axes[0].parameter == spec.axes[1].parameter) {
    throw ValidationError("sweep axes must name two different parameters");
  }
  for (const SweepAxis& a : spec.axes) {
    if (!(a.lo > 0.0) || !(a.hi > a.lo)) {
      throw ValidationError("axis " + std::string(to_string(a.parameter)) +
                            " needs 0 < lo < hi");
    }
    if (a.steps < 2) throw ValidationError("axis steps must be at least 2");
  }
  for (int i = 0; i < 4; ++i) {
    const auto p = static_cast<Parameter>(i);
    if (p == spec.axes[0].parameter || p == spec.axes[1].parameter) continue;
    GameInstance g = spec.fixed;
    const double v = parameter_ref(g, p);
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw ValidationError("fixed parameter " + std::string(to_string(p)) +
                            " must be positive");
    }
  }
}

std::string evaluate_predicate(const GameInstance& g, SweepPredicate p,
                               const MutualOptions& opts) {
  switch (p) {
    case SweepPredicate::kMutualBudget:
      return flag(budget_mutual_exists(g, opts).exists);
    case SweepPredicate::kMutualContest:
      return flag(contest_mutual_exists(g, opts).exists);
    case SweepPredicate::kMutualJoint:
      return flag(joint_mutual_exists(g, opts).exists);
    case SweepPredicate::kCase:
      return to_string(classify_case(g, opts.case_eps));
    case SweepPredicate::kRegion:
      return to_string(classify_region(g));
    case SweepPredicate::kCollectiveGain:
      return num(max_collective_payoff(g) - collective_payoff(g, Transfer{}, opts.case_eps));
  }
  throw ValidationError("unknown predicate");
}

void write_sweep_csv(const SweepSpec& spec, const MutualOptions& opts, std::ostream& out,
                     int threads) {
  validate(spec);
  const SweepAxis& a = spec.axes[0];
  const SweepAxis& b = spec.axes[1];
  const std::size_t n = static_cast<std::size_t>(a.steps) * b.steps;
  std::vector<std::string> rows(n);
  parallel_for(n, threads, [&](std::size_t k) {
    GameInstance g = spec.fixed;
    parameter_ref(g, a.parameter) = a.value(static_cast<int>(k / b.steps));
    parameter_ref(g, b.parameter) = b.value(static_cast<int>(k % b.steps));
    rows[k] = game_cells(g) + "," + evaluate_predicate(g, spec.predicate, opts);
  });
  std::array<bool, 4> swept{};
  swept[static_cast<int>(a.parameter)] = swept[static_cast<int>(b.parameter)] = true;
  std::string name(to_string(spec.predicate));
  std::replace(name.begin(), name.end(), '-', '_');
  out << game_header(swept) << "," << name << "[" << predicate_unit(spec.predicate)
      << "]\n";
  for (const std::string& row : rows) out << row << '\n';
}

void write_curve_csv(const GameInstance& g, Mechanism m, int steps, std::ostream& out,
                     double eps) {
  validate(g);
  if (steps < 2) throw ValidationError("curve needs at least 2 steps");
  const bool budget = m == Mechanism::kBudget;
  const double lo = budget ? -g.x2 : -g.phi2;
  const double hi = budget ? g.x1 : g.phi1;
  const double inset = 1e-6 * (hi - lo);
  out << game_header({false, false, false, false}) << ",tau[" << kBudgetUnit << "],nu["
      << kValueUnit << "],u1[" << kValueUnit << "],u2[" << kValueUnit << "],collective["
      << kValueUnit << "]\n";
  for (int i = 0; i < steps; ++i) {
    const double v = lo + inset + (hi - lo - 2.0 * inset) * i / (steps - 1);
    const Transfer t = budget ? Transfer{v, 0.0} : Transfer{0.0, v};
    const PlayerPayoffs p = player_payoffs(g, t, eps);
    out << game_cells(g) << ',' << num(t.tau) << ',' << num(t.nu) << ',' << num(p.u1) << ','
        << num(p.u2) << ',' << num(p.u1 + p.u2) << '\n';
  }
}

bool VerifyRow::max_agree() const {
  return std::abs(closed_max - grid_max) <= 1e-6 * std::abs(closed_max);
}

VerifySummary run_verify(int count, std::uint64_t seed, const MutualOptions& opts,
                         int threads) {
  if (count < 1) throw ValidationError("count must be at least 1");
  SplitMix64 rng(seed);
  VerifySummary s;
  s.rows.resize(count);
  for (VerifyRow& r : s.rows) r.game = sample_game(rng);
  parallel_for(s.rows.size(), threads, [&](std::size_t i) {
    VerifyRow& r = s.rows[i];
    const MutualBenefitVerdict v = contest_mutual_exists(r.game, opts);
    r.label = to_string(classify_case(r.game, opts.case_eps));
    r.analytic = v.analytic;
    r.near_boundary = v.near_boundary;
    r.oracle = grid_mutual_search(r.game, Mechanism::kContest).exists;
    r.closed_max = max_collective_payoff(r.game);
    r.grid_max = grid_max_collective(r.game, Mechanism::kContest);
  });
  for (const VerifyRow& r : s.rows) {
    if (!r.agree()) {
      ++s.disagreements;
      if (!r.near_boundary) ++s.unexplained;
    }
    if (!r.max_agree()) ++s.max_mismatches;
  }
  return s;
}

void write_verify_csv(const VerifySummary& summary, std::ostream& out) {
  out << game_header({false, false, false, false})
      << ",case[label],analytic_contest[bool],oracle_contest[bool],agree[bool],"
         "near_boundary[bool],max_collective_closed["
      << kValueUnit << "],max_collective_grid[" << kValueUnit << "],max_agree[bool]\n";
  for (const VerifyRow& r : summary.rows) {
    out << game_cells(r.game) << ',' << r.label << ',' << flag(r.analytic) << ','
        << flag(r.oracle) << ',' << flag(r.agree()) << ',' << flag(r.near_boundary) << ','
        << num(r.closed_max) << ',' << num(r.grid_max) << ',' << flag(r.max_agree())
        << '\n';
  }
}

CalibrationReport run_calibration(int count, std::uint64_t seed, int threads) {
  if (count < 1) throw ValidationError("count must be at least 1");
  SplitMix64 rng(seed);
  std::vector<GameInstance> games(count);
  for (GameInstance& g : games) g = sample_game(rng);

  // Readings: corrected, each site literal on its own, everything literal.
  std::vector<ConditionReading> readings{ConditionReading::corrected()};
  for (std::size_t i = 0; i < kTypoSiteCount; ++i) {
    readings.push_back(ConditionReading::corrected().with_literal(static_cast<TypoSite>(i)));
  }
  readings.push_back(ConditionReading::literal());

  struct Outcome {
    bool oracle = false;
    std::vector<char> agree, unexplained;
  };
  std::vector<Outcome> outcomes(games.size());
  parallel_for(games.size(), threads, [&](std::size_t i) {
    Outcome& o = outcomes[i];
    o.oracle = grid_mutual_search(games[i], Mechanism::kContest).exists;
    for (const ConditionReading& reading : readings) {
      MutualOptions opts;
      opts.reading = reading;
      const bool analytic = contest_condition_holds(games[i], opts);
      const bool agree = analytic == o.oracle;
      o.agree.push_back(agree);
      // Near-boundary is only needed to excuse a disagreement.
      o.unexplained.push_back(!agree && !contest_mutual_exists(games[i], opts).near_boundary);
    }
  });

  CalibrationReport report;
  report.count = count;
  report.seed = seed;
  std::vector<int> agree(readings.size()), unexplained(readings.size());
  for (const Outcome& o : outcomes) {
    report.oracle_positive += o.oracle;
    for (std::size_t r = 0; r < readings.size(); ++r) {
      agree[r] += o.agree[r];
      unexplained[r] += o.unexplained[r];
    }
  }
  for (std::size_t i = 0; i < kTypoSiteCount; ++i) {
    CalibrationSite site;
    site.name = std::string(to_string(static_cast<TypoSite>(i)));
    site.corrected_agree = agree[0];
    site.corrected_unexplained = unexplained[0];
    site.literal_agree = agree[i + 1];
    site.literal_unexplained = unexplained[i + 1];
    report.sites.push_back(site);
  }
  report.all = {"all", agree.back(), agree[0], unexplained.back(), unexplained[0]};
  return report;
}

void write_calibration_markdown(const CalibrationReport& report, std::ostream& out) {
  auto pct = [&](int k) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f%%", 100.0 * k / report.count);
    return std::string(buf);
  };
  out << "# Contest-condition calibration\n\n"
      << "Each suspected misprint in the contest-transfer conditions was evaluated as "
         "printed (literal) and in the corrected reading, one site at a time, against the "
         "grid oracle (`grid_mutual_search`, contest mechanism, 4001 points).\n\n"
      << "- games: " << report.count << ", drawn uniformly from [0.05, 3]^4 with splitmix64 "
      << "seed " << report.seed << "\n"
      << "- games with a mutually beneficial contest transfer (oracle): "
      << report.oracle_positive << "\n"
      << "- \"unexplained\" counts disagreements on games not flagged near-boundary\n\n"
      << "| site | literal agreement | literal unexplained | corrected agreement | "
         "corrected unexplained | default |\n"
      << "|---|---|---|---|---|---|\n";
  auto row = [&](const CalibrationSite& s) {
    const bool corrected = s.corrected_agree >= s.literal_agree;
    out << "| " << s.name << " | " << s.literal_agree << " (" << pct(s.literal_agree)
        << ") | " << s.literal_unexplained << " | " << s.corrected_agree << " ("
        << pct(s.corrected_agree) << ") | " << s.corrected_unexplained << " | "
        << (corrected ? "corrected" : "literal") << " |\n";
  };
  for (const CalibrationSite& s : report.sites) row(s);
  row(report.all);
  out << "\nSites:\n\n"
      << "- `c2-factor`: constant term of the second Region-2 quadratic, `-4 phi1 phi2` as "
         "printed versus `-phi1 phi2`.\n"
      << "- `form3.3-phi2phi2`: upper bound of the Region-3 Case 2 to Case 1 (1>2) "
         "condition, `sqrt(x1 phi2 phi2 / x2)` versus `sqrt(x1 phi1 phi2 / x2)`.\n"
      << "- `b7c7-phi2phi2`: the same product inside the shared term of b7 and c7.\n"
      << "- `form4.5-phi2phi2`: the same product in the Case 2 to Case 1 (1>2) bound of "
         "Regions 4 and 5.\n"
      << "- `c14-square`: c14 printed without squaring the bracket and with `-phi1 phi2` "
         "inside it.\n"
      << "- `region5-source-case`: the last Region-5 group (forms 5.10 to 5.12) listed "
         "under a Case 2 source instead of Case 3.\n\n"
      << "Regenerate with `lotto calibrate --count " << report.count << " --seed "
      << report.seed << " --out docs/calibration.md`.\n";
}

}  // namespace lotto
