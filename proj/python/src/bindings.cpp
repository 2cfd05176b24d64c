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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "lotto/adversary.hpp"
#include "lotto/collective.hpp"
#include "lotto/game.hpp"
#include "lotto/mutual.hpp"
#include "lotto/oracle.hpp"
#include "lotto/quadratic.hpp"
#include "lotto/report.hpp"

namespace py = pybind11;
using namespace lotto;

namespace {

MutualOptions options(double eps, const std::string& typo_mode) {
  MutualOptions opts;
  opts.case_eps = eps;
  if (typo_mode == "literal") {
    opts.reading = ConditionReading::literal();
  } else if (typo_mode != "corrected") {
    throw ValidationError("typo_mode must be 'literal' or 'corrected'");
  }
  return opts;
}

Mechanism mechanism(const std::string& text) {
  if (auto m = parse_mechanism(text)) return *m;
  throw ValidationError("unknown mechanism '" + text + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Coalitional General Lotto games: best responses and transfers";
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<GameInstance>(m, "GameInstance")
      .def(py::init<double, double, double, double>(), py::arg("phi1"), py::arg("phi2"),
           py::arg("x1"), py::arg("x2"))
      .def_readwrite("phi1", &GameInstance::phi1)
      .def_readwrite("phi2", &GameInstance::phi2)
      .def_readwrite("x1", &GameInstance::x1)
      .def_readwrite("x2", &GameInstance::x2)
      .def("total_valuation", &GameInstance::total_valuation)
      .def("total_budget", &GameInstance::total_budget)
      .def("__eq__", [](const GameInstance& a, const GameInstance& b) { return a == b; })
      .def("__repr__", [](const GameInstance& g) { return "GameInstance" + to_string(g); });

  py::class_<Transfer>(m, "Transfer")
      .def(py::init<double, double>(), py::arg("tau") = 0.0, py::arg("nu") = 0.0)
      .def_readwrite("tau", &Transfer::tau)
      .def_readwrite("nu", &Transfer::nu)
      .def("__repr__", [](const Transfer& t) {
        return "Transfer(tau=" + std::to_string(t.tau) + ", nu=" + std::to_string(t.nu) + ")";
      });

  m.def("one_v_one_payoff", [](double phi, double xp, double xa) {
    const PayoffPair p = one_v_one_payoff(phi, xp, xa);
    return py::make_tuple(p.u_player, p.u_adversary);
  }, py::arg("phi"), py::arg("x_player"), py::arg("x_adv"));
  m.def("post_transfer", &post_transfer, py::arg("game"), py::arg("transfer"));
  m.def("swap_indices", &swap_indices, py::arg("game"));
  m.def("is_feasible", &is_feasible, py::arg("game"), py::arg("transfer"));

  m.def("classify_case", [](const GameInstance& g, double eps) {
    return to_string(classify_case(g, eps));
  }, py::arg("game"), py::arg("eps") = kDefaultCaseEps);
  m.def("best_response", [](const GameInstance& g, double eps) {
    const AdversaryAllocation a = best_response(g, eps);
    return py::make_tuple(a.xa1, a.xa2);
  }, py::arg("game"), py::arg("eps") = kDefaultCaseEps);
  m.def("player_payoffs", [](const GameInstance& g, const Transfer& t, double eps) {
    const PlayerPayoffs p = player_payoffs(g, t, eps);
    return py::make_tuple(p.u1, p.u2);
  }, py::arg("game"), py::arg("transfer") = Transfer{}, py::arg("eps") = kDefaultCaseEps);

  m.def("classify_region", [](const GameInstance& g) { return to_string(classify_region(g)); },
        py::arg("game"));
  m.def("quadratic_window", [](double a, double b, double c) {
    const QuadraticWindow w = quadratic_window(a, b, c);
    return py::make_tuple(w.discriminant, w.z_minus, w.z_plus);
  }, py::arg("a"), py::arg("b"), py::arg("c"));

  m.def("_verdict_json", [](const GameInstance& g, const std::string& mech, double eps,
                            const std::string& typo_mode) {
    return to_json(mutual_exists(g, mechanism(mech), options(eps, typo_mode))).dump();
  });
  m.def("_analyze_json", [](const GameInstance& g, double eps, const std::string& typo_mode) {
    return to_json(analyze(g, options(eps, typo_mode))).dump();
  });

  m.def("collective_payoff", [](const GameInstance& g, const Transfer& t, double eps) {
    return collective_payoff(g, t, eps);
  }, py::arg("game"), py::arg("transfer") = Transfer{}, py::arg("eps") = kDefaultCaseEps);
  m.def("optimal_contest_transfer", &optimal_contest_transfer, py::arg("game"));
  m.def("optimal_budget_transfer", &optimal_budget_transfer, py::arg("game"));
  m.def("max_collective_payoff", &max_collective_payoff, py::arg("game"));
  m.def("collectively_beneficial_exists", [](const GameInstance& g, double eps) {
    return collectively_beneficial_exists(g, eps);
  }, py::arg("game"), py::arg("eps") = kDefaultCaseEps);

  m.def("grid_best_response", [](const GameInstance& g, int resolution, double margin) {
    const AdversaryAllocation a = grid_best_response(g, GridSpec{resolution, margin});
    return py::make_tuple(a.xa1, a.xa2);
  }, py::arg("game"), py::arg("resolution") = 4001, py::arg("margin") = 1e-6);
  m.def("_grid_verdict_json", [](const GameInstance& g, const std::string& mech) {
    return to_json(grid_mutual_search(g, mechanism(mech))).dump();
  });
  m.def("grid_max_collective", [](const GameInstance& g, const std::string& mech) {
    return grid_max_collective(g, mechanism(mech));
  }, py::arg("game"), py::arg("mechanism"));
}
