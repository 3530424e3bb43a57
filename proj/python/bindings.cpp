// Copyright 2026 The Loschmidt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "loschmidt/ed_engine.hpp"
#include "loschmidt/error.hpp"
#include "loschmidt/essential_states.hpp"
#include "loschmidt/free_fermion.hpp"
#include "loschmidt/suite.hpp"
#include "loschmidt/rate_analysis.hpp"

namespace py = pybind11;
using namespace loschmidt;

namespace {

QuenchSpec make_quench(double g0, double gf, int sites, const std::string& boundary, const TimeGrid& grid,
                       double jf, const std::string& initial) {
  QuenchSpec q;
  q.g_initial = g0;
  q.g_final = gf;
  q.sites = sites;
  if (boundary == "periodic") {
    q.boundary = Boundary::periodic;
  } else if (boundary == "open") {
    q.boundary = Boundary::open;
  } else {
    throw py::value_error("boundary must be 'periodic' or 'open'");
  }
  q.grid = grid;
  q.interaction_final = jf;
  if (initial == "even-ground") {
    q.initial = InitialState::even_ground;
  } else if (initial == "polarized") {
    q.initial = InitialState::polarized_z;
  } else {
    throw py::value_error("initial must be 'even-ground' or 'polarized'");
  }
  return q;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Loschmidt echoes and rate functions for quantum quenches";
  m.attr("__version__") = LOSCHMIDT_VERSION;

  py::register_exception<Error>(m, "LoschmidtError", PyExc_RuntimeError);

  py::class_<TimeGrid>(m, "TimeGrid")
      .def(py::init([](double t_start, double t_end, int n_points) {
             TimeGrid g{t_start, t_end, n_points};
             g.validate();
             return g;
           }),
           py::arg("t_start") = 0.0, py::arg("t_end") = 10.0, py::arg("n_points") = 2001)
      .def_readonly("t_start", &TimeGrid::t_start)
      .def_readonly("t_end", &TimeGrid::t_end)
      .def_readonly("n_points", &TimeGrid::n_points)
      .def_property_readonly("spacing", &TimeGrid::spacing)
      .def("times", &TimeGrid::times);

  py::class_<LoschmidtTrace>(m, "LoschmidtTrace")
      .def_readonly("times", &LoschmidtTrace::times)
      .def_readonly("echo", &LoschmidtTrace::echo)
      .def_readonly("rate", &LoschmidtTrace::rate)
      .def_readonly("size_L", &LoschmidtTrace::size_L)
      .def("__len__", &LoschmidtTrace::size);

  py::class_<ThermoRateTrace>(m, "ThermoRateTrace")
      .def_readonly("times", &ThermoRateTrace::times)
      .def_readonly("rate", &ThermoRateTrace::rate)
      .def_readonly("error_estimate", &ThermoRateTrace::error_estimate)
      .def_readonly("quadrature_nodes", &ThermoRateTrace::quadrature_nodes)
      .def_readonly("max_error", &ThermoRateTrace::max_error);

  py::class_<CriticalTimes>(m, "CriticalTimes")
      .def_readonly("k_star", &CriticalTimes::k_star)
      .def_readonly("t_star", &CriticalTimes::t_star);

  py::class_<CuspReport>(m, "CuspReport")
      .def_readonly("cusp_times", &CuspReport::cusp_times)
      .def_readonly("sharpness", &CuspReport::sharpness)
      .def_readonly("coarse_grid", &CuspReport::coarse_grid)
      .def("cusps", &CuspReport::cusps)
      .def_property_readonly("classification", [](const CuspReport& r) {
        std::vector<std::string> out;
        for (PeakClass c : r.classification) out.push_back(to_string(c));
        return out;
      });

  m.def(
      "ed_quench_trace",
      [](double g0, double gf, int sites, const std::string& boundary, const TimeGrid& grid, double jf,
         const std::string& initial) {
        return ed_quench_trace(make_quench(g0, gf, sites, boundary, grid, jf, initial));
      },
      py::arg("g0"), py::arg("gf"), py::arg("sites"), py::arg("boundary") = "periodic", py::arg("grid") = TimeGrid{},
      py::arg("jf") = 1.0, py::arg("initial") = "even-ground", py::call_guard<py::gil_scoped_release>());

  m.def(
      "free_fermion_trace",
      [](double g0, double gf, int sites, const TimeGrid& grid, double jf, const std::string& initial) {
        return free_fermion_quench_trace(make_quench(g0, gf, sites, "periodic", grid, jf, initial));
      },
      py::arg("g0"), py::arg("gf"), py::arg("sites"), py::arg("grid") = TimeGrid{}, py::arg("jf") = 1.0,
      py::arg("initial") = "even-ground", py::call_guard<py::gil_scoped_release>());

  m.def("thermo_rate", &thermo_rate, py::arg("g0"), py::arg("gf"), py::arg("grid") = TimeGrid{},
        py::arg("nodes") = 64, py::arg("tolerance") = 1e-8, py::call_guard<py::gil_scoped_release>());
  m.def("critical_times", &critical_times, py::arg("g0"), py::arg("gf"), py::arg("n_max") = 5);
  m.def("dispersion", &dispersion, py::arg("g"), py::arg("interaction"), py::arg("k"));
  m.def("detect_cusps", &detect_cusps, py::arg("trace"), py::arg("threshold") = kDefaultCurvatureThreshold);

  m.def(
      "two_level_echo", [](double splitting, double weight, double t) { return two_level_echo({splitting, weight}, t); },
      py::arg("splitting"), py::arg("weight"), py::arg("t"));
  m.def(
      "ladder_echo", [](int levels, double spacing, double t) { return ladder_echo(LadderSpec::uniform(levels, spacing), t); },
      py::arg("levels"), py::arg("spacing"), py::arg("t"));
  m.def(
      "bose_site_echo",
      [](double nbar, double interaction, double t) {
        return bose_site_echo(BoseSiteSpec::coherent(nbar, interaction), t);
      },
      py::arg("nbar"), py::arg("interaction"), py::arg("t"));

  m.def("run_suite", [] {
    py::list out;
    for (const CheckResult& r : run_suite()) {
      py::dict d;
      d["id"] = r.id;
      d["name"] = r.name;
      d["passed"] = r.passed;
      d["detail"] = r.detail;
      d["seconds"] = r.seconds;
      out.append(d);
    }
    return out;
  });
}
