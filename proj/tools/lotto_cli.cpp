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

// Command-line front end: analyze, sweep, curve, verify, calibrate.
//
// Exit codes: 0 success, 1 invalid input, 2 oracle disagreement.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lotto/experiments.hpp"
#include "lotto/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitDisagreement = 2;

struct GameFlags {
  std::optional<double> phi1, phi2, x1, x2;

  void add(CLI::App* cmd, bool required) {
    for (auto [name, slot] : {std::pair{"--phi1", &phi1}, std::pair{"--phi2", &phi2},
                              std::pair{"--x1", &x1}, std::pair{"--x2", &x2}}) {
      auto* opt = cmd->add_option(name, *slot);
      if (required) opt->required();
    }
  }

  lotto::GameInstance game() const {
    return {phi1.value_or(0.0), phi2.value_or(0.0), x1.value_or(0.0), x2.value_or(0.0)};
  }
};

struct CommonFlags {
  double eps = lotto::kDefaultCaseEps;
  std::string typo_mode = "corrected";

  void add(CLI::App* cmd) {
    cmd->add_option("--eps", eps, "case-classification tolerance");
    cmd->add_option("--typo-mode", typo_mode, "reading of the suspected misprints")
        ->check(CLI::IsMember({"literal", "corrected"}));
  }

  lotto::MutualOptions options() const {
    if (!(eps >= 0.0 && eps < 1.0)) throw lotto::ValidationError("--eps must lie in [0, 1)");
    lotto::MutualOptions opts;
    opts.case_eps = eps;
    opts.reading = typo_mode == "literal" ? lotto::ConditionReading::literal()
                                          : lotto::ConditionReading::corrected();
    return opts;
  }
};

// Writes to --out when given, else standard output.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw lotto::ValidationError("cannot write to '" + path + "'");
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void close() {
    if (!file_) return;
    file_->close();
    if (!*file_) throw lotto::ValidationError("error while writing output file");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

lotto::Mechanism mechanism_from(const std::string& text) {
  if (auto m = lotto::parse_mechanism(text)) return *m;
  throw lotto::ValidationError("unknown mechanism '" + text + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coalitional General Lotto analysis"};
  app.require_subcommand(1);

  GameFlags game;
  CommonFlags common;
  std::string out;
  std::string mechanism = "contest";
  int steps = 500;
  int count = 1000;
  std::uint64_t seed = 7;
  int threads = 0;
  std::string axes = "x1:0.02:3:300,x2:0.02:3:300";
  std::string predicate = "mutual-contest";

  auto* analyze = app.add_subcommand("analyze", "JSON report for one game");
  game.add(analyze, true);
  common.add(analyze);
  analyze->add_option("--out", out, "output file (default stdout)");

  auto* sweep = app.add_subcommand("sweep", "CSV of a predicate over a 2-D parameter grid");
  game.add(sweep, false);
  common.add(sweep);
  sweep->add_option("--axes", axes, "two axes as name:lo:hi:steps, comma separated")
      ->capture_default_str();
  sweep->add_option("--predicate", predicate)
      ->check(CLI::IsMember({"mutual-budget", "mutual-contest", "mutual-joint", "case",
                             "region", "collective-gain"}))
      ->capture_default_str();
  sweep->add_option("--threads", threads, "worker threads (0: all cores)");
  sweep->add_option("--out", out, "output file (default stdout)");

  auto* curve = app.add_subcommand("curve", "CSV of payoffs along one transfer axis");
  game.add(curve, true);
  common.add(curve);
  curve->add_option("--mechanism", mechanism)
      ->check(CLI::IsMember({"budget", "contest", "joint"}))
      ->capture_default_str();
  curve->add_option("--steps", steps)->check(CLI::Range(2, 10000000))->capture_default_str();
  curve->add_option("--out", out, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "compare analytic verdicts with the grid oracle");
  common.add(verify);
  verify->add_option("--count", count)->check(CLI::Range(1, 100000000))->capture_default_str();
  verify->add_option("--seed", seed)->capture_default_str();
  verify->add_option("--threads", threads, "worker threads (0: all cores)");
  verify->add_option("--out", out, "report CSV (default stdout)");

  auto* calibrate =
      app.add_subcommand("calibrate", "score each suspected misprint against the oracle");
  int calibrate_count = 100000;
  std::uint64_t calibrate_seed = 2026;
  calibrate->add_option("--count", calibrate_count)
      ->check(CLI::Range(1, 100000000))
      ->capture_default_str();
  calibrate->add_option("--seed", calibrate_seed)->capture_default_str();
  calibrate->add_option("--threads", threads, "worker threads (0: all cores)");
  calibrate->add_option("--out", out, "markdown report (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*analyze) {
      const lotto::MutualOptions opts = common.options();
      const auto report = lotto::analyze(game.game(), opts);
      Output o(out);
      o.stream() << lotto::to_json(report).dump(2) << '\n';
      o.close();
    } else if (*sweep) {
      lotto::SweepSpec spec;
      spec.fixed = game.game();
      const auto comma = axes.find(',');
      if (comma == std::string::npos) {
        throw lotto::ValidationError("--axes needs two comma-separated axes");
      }
      spec.axes = {lotto::parse_axis(axes.substr(0, comma)),
                   lotto::parse_axis(axes.substr(comma + 1))};
      spec.predicate = *lotto::parse_sweep_predicate(predicate);
      lotto::validate(spec);
      const lotto::MutualOptions opts = common.options();
      Output o(out);
      lotto::write_sweep_csv(spec, opts, o.stream(), threads);
      o.close();
    } else if (*curve) {
      const lotto::MutualOptions opts = common.options();
      Output o(out);
      lotto::write_curve_csv(game.game(), mechanism_from(mechanism), steps, o.stream(),
                             opts.case_eps);
      o.close();
    } else if (*verify) {
      const lotto::MutualOptions opts = common.options();
      Output o(out);
      const auto summary = lotto::run_verify(count, seed, opts, threads);
      lotto::write_verify_csv(summary, o.stream());
      o.close();
      std::cerr << "games " << summary.rows.size() << ", contest disagreements "
                << summary.disagreements << " (" << summary.unexplained
                << " not near a boundary), collective-optimum mismatches "
                << summary.max_mismatches << '\n';
      if (!summary.passed()) return kExitDisagreement;
    } else if (*calibrate) {
      Output o(out);
      const auto report = lotto::run_calibration(calibrate_count, calibrate_seed, threads);
      lotto::write_calibration_markdown(report, o.stream());
      o.close();
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}
