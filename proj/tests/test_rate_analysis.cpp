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
#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "loschmidt/ed_engine.hpp"
#include "loschmidt/error.hpp"
#include "loschmidt/essential_states.hpp"
#include "loschmidt/free_fermion.hpp"
#include "loschmidt/rate_analysis.hpp"
#include "reference_values.hpp"

using namespace loschmidt;

namespace {

constexpr double kPi = std::numbers::pi;

LoschmidtTrace product_trace(double g, const TimeGrid& grid, int sites) {
  return sample_echo([&](double t) { return std::pow(std::cos(g * t / 2.0), 2 * sites); }, grid, sites);
}

}  // namespace

TEST_CASE("rate from echo") {
  LoschmidtTrace ones{{0.0, 1.0, 2.0}, {1.0, 1.0, 1.0}, {}, 4.0};
  for (double r : rate_from_echo(ones).rate) CHECK(r == 0.0);

  const double g = 1.3;
  for (int sites : {1, 4, 12}) {
    LoschmidtTrace t = product_trace(g, {0.1, 2.0, 20}, sites);
    t.rate.clear();
    t = rate_from_echo(t);
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(t.rate[i] == doctest::Approx(-2.0 * std::log(std::abs(std::cos(g * t.times[i] / 2.0)))).epsilon(1e-12));
    }
    const LoschmidtTrace again = rate_from_echo(t);
    CHECK(again.rate == t.rate);
  }
  LoschmidtTrace zero{{0.0}, {0.0}, {}, 1.0};
  CHECK(std::isinf(rate_from_echo(zero).rate[0]));
  LoschmidtTrace tiny{{0.0}, {-1e-13}, {}, 1.0};
  CHECK(std::isinf(rate_from_echo(tiny).rate[0]));
  LoschmidtTrace bad{{0.0}, {-1e-6}, {}, 1.0};
  CHECK_THROWS_AS(rate_from_echo(bad), Error);
}

TEST_CASE("cusp detection") {
  SUBCASE("product formula at g = 2") {
    const TimeGrid grid{0.0, 8.0, 1601};
    const CuspReport r = detect_cusps(product_trace(2.0, grid, 1));
    const auto cusps = r.cusps();
    REQUIRE(cusps.size() >= 3);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(cusps[k] - (2 * k + 1) * kPi / 2.0) <= grid.spacing());
    CHECK(r.grid_spacing == doctest::Approx(0.005));
    CHECK_FALSE(r.coarse_grid);
  }
  SUBCASE("infinite sentinels are cusps") {
    // The grid hits the zero of cos(t) at pi/2 exactly; a second sentinel is
    // planted at pi/4 where the rate is otherwise smooth.
    LoschmidtTrace t = product_trace(2.0, {0.0, kPi, 201}, 1);
    CHECK(t.rate[100] > 60.0);
    t.rate[50] = std::numeric_limits<double>::infinity();
    const auto cusps = detect_cusps(t).cusps();
    REQUIRE(cusps.size() == 2);
    CHECK(cusps[0] == doctest::Approx(kPi / 4.0).epsilon(1e-12));
    CHECK(cusps[1] == doctest::Approx(kPi / 2.0).epsilon(1e-12));
  }
  SUBCASE("flat rate") {
    const LoschmidtTrace t = sample_echo([](double) { return 1.0; }, {0.0, 5.0, 101});
    const CuspReport r = detect_cusps(t);
    CHECK(r.cusp_times.empty());
    CHECK(r.to_json()["cusp_times"].empty());
  }
  SUBCASE("smooth oscillation gives smooth maxima only") {
    const LoschmidtTrace t = sample_echo([](double x) { return 0.75 + 0.25 * std::cos(x); }, {0.0, 30.0, 3001});
    const CuspReport r = detect_cusps(t);
    CHECK(r.cusp_times.size() >= 4);
    CHECK(r.cusps().empty());
    for (PeakClass c : r.classification) CHECK(to_string(c) == "smooth_max");
  }
  SUBCASE("coarse grid flag") {
    const LoschmidtTrace t = sample_echo([](double x) { return 0.75 + 0.25 * std::cos(x); }, {0.0, 60.0, 41});
    CHECK(detect_cusps(t).coarse_grid);
  }
  SUBCASE("time reflection mirrors cusp times") {
    const double g = 1.7;
    const LoschmidtTrace fwd = product_trace(g, {0.0, 6.0, 1201}, 1);
    const LoschmidtTrace bwd = product_trace(g, {-6.0, 0.0, 1201}, 1);
    const auto a = detect_cusps(fwd).cusps();
    const auto b = detect_cusps(bwd).cusps();
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == doctest::Approx(-b[b.size() - 1 - i]).epsilon(1e-12));
  }
  SUBCASE("thermodynamic cusps at critical times") {
    const ThermoRateTrace th = thermo_rate(0.5, 2.0, {0.0, 6.0, 6001}, 64);
    const LoschmidtTrace t{th.times, std::vector<double>(th.times.size(), 1.0), th.rate, 1.0};
    const auto cusps = detect_cusps(t).cusps();
    REQUIRE(cusps.size() == 3);
    for (int n = 0; n < 3; ++n) CHECK(std::abs(cusps[n] - reference::kCritical05To2[n]) < 1e-3);
  }
  SUBCASE("within-phase thermodynamic rate") {
    const ThermoRateTrace th = thermo_rate(0.2, 0.4, {0.0, 6.0, 6001}, 64);
    const LoschmidtTrace t{th.times, std::vector<double>(th.times.size(), 1.0), th.rate, 1.0};
    CHECK(detect_cusps(t).cusps().empty());
  }
  LoschmidtTrace uneven{{0.0, 1.0, 3.0}, {1.0, 1.0, 1.0}, {0.0, 0.0, 0.0}, 1.0};
  CHECK_THROWS_AS(detect_cusps(uneven), Error);
}

TEST_CASE("scaling scans") {
  const QuenchSpec crossing{0.5, 2.0, 8, Boundary::periodic, {0.0, 6.0, 6001}};
  const std::vector<int> sizes = {8, 10, 12, 14};
  const ScalingScan s = scaling_scan(crossing, sizes);
  CHECK(s.sizes == sizes);
  CHECK(s.sharpness_increasing());
  // Finite chains peak near, not at, the first critical time.
  for (double t : s.peak_times) CHECK(std::abs(t - reference::kCritical05To2[0]) < 0.25);

  const QuenchSpec within{0.2, 0.4, 8, Boundary::periodic, {0.0, 6.0, 6001}};
  const std::vector<int> small = {8, 10, 12};
  CHECK(scaling_scan(within, small).sharpness_spread() <= 2.0);

  const ScalingScan none = scaling_scan({0.9, 0.9, 8, Boundary::periodic, {0.0, 6.0, 601}}, small);
  for (double t : none.peak_times) CHECK(std::isnan(t));
  std::ostringstream csv;
  s.write_csv(csv);
  CHECK(csv.str().rfind("L,peak_time,sharpness\n", 0) == 0);

  const std::vector<int> unordered = {10, 8};
  CHECK_THROWS_AS(scaling_scan(crossing, unordered), Error);
}

TEST_CASE("within-phase echo floor") {
  // Quench 0.2 -> 0.4 at L = 8: overlap of the initial state with the final
  // eigenstates bounds the rate from above.
  const int sites = 8;
  const QuenchSpec q{0.2, 0.4, sites, Boundary::periodic, {0.0, 20.0, 2001}};
  const SpectralDecomposition s = diagonalize(build_tfim({sites, Boundary::periodic, 0.4}));
  const ComplexVector a = spectral_overlaps(s, quench_initial_state(q));
  std::vector<double> w(a.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) w[i] = std::norm(a[i]);
  std::sort(w.begin(), w.end(), std::greater<>());
  REQUIRE(w[0] > 0.9);
  const double bound = echo_floor_rate_bound(w, sites);
  const LoschmidtTrace t = ed_quench_trace(q);
  CHECK(*std::max_element(t.rate.begin(), t.rate.end()) <= bound);
}
