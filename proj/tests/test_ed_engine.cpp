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

#include "doctest.h"
#include "loschmidt/ed_engine.hpp"
#include "loschmidt/error.hpp"
#include "loschmidt/free_fermion.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

using namespace loschmidt;

namespace {

constexpr double kPi = std::numbers::pi;

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("diagonalize small cases") {
  const SpectralDecomposition s = diagonalize(build_tfim({2, Boundary::open, 0.0}));
  CHECK(s.energies[0] == doctest::Approx(-0.5));
  CHECK(s.energies[1] == doctest::Approx(-0.5));
  CHECK(s.energies[2] == doctest::Approx(0.5));
  CHECK(s.energies[3] == doctest::Approx(0.5));

  const SpectralDecomposition one = diagonalize(build_tfim({1, Boundary::open, 2.0, 0.0}));
  CHECK(one.energies[0] == doctest::Approx(-1.0));
  CHECK(one.energies[1] == doctest::Approx(1.0));
}

TEST_CASE("reconstruction and orthonormality") {
  const RealMatrix h = build_tfim({8, Boundary::periodic, 1.5}).dense();
  const SpectralDecomposition s = diagonalize(h);
  const RealMatrix& v = s.vectors;
  CHECK((v * s.energies.asDiagonal() * v.transpose() - h).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((v.transpose() * v - RealMatrix::Identity(256, 256)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("L = 10 spectrum matches free-fermion many-body energies") {
  // Even sector: antiperiodic momenta, even number of excitations above the
  // Bogoliubov vacuum. The ground energy is -(1/2) sum eps_k over all 2 pi
  // momenta, i.e. -sum over k in (0, pi).
  const double g = 1.5;
  const int sites = 10;
  const FermionModeSet modes = build_modes(g, g, sites);
  double e0 = 0.0;
  for (double eps : modes.dispersion_final) e0 -= eps;
  const GroundState even = sector_ground_state(build_tfim({sites, Boundary::periodic, g}), Parity::even);
  CHECK(even.energy == doctest::Approx(e0).epsilon(1e-12));
  // Lowest even excitation: one pair (k, -k) of the softest mode.
  const SpectralDecomposition s = diagonalize(sector_hamiltonian(build_tfim({sites, Boundary::periodic, g}), Parity::even));
  const double softest = *std::min_element(modes.dispersion_final.begin(), modes.dispersion_final.end());
  CHECK(s.energies[1] - s.energies[0] == doctest::Approx(2.0 * softest).epsilon(1e-10));
}

TEST_CASE("ground states") {
  const GroundState a = ground_state(build_tfim({2, Boundary::open, 0.0}));
  CHECK(a.energy == doctest::Approx(-0.5));
  CHECK(a.degenerate);
  const ComplexVector& v = a.state.amplitudes;
  CHECK(std::norm(v[0]) + std::norm(v[3]) == doctest::Approx(1.0));

  const GroundState b = ground_state(build_tfim({1, Boundary::open, 2.0, 0.0}));
  CHECK(b.energy == doctest::Approx(-1.0));
  CHECK(std::abs(std::abs(b.state.amplitudes[0]) - 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(b.state.amplitudes[0] - b.state.amplitudes[1]) < 1e-14);
  CHECK_FALSE(b.degenerate);

  const GroundState c = ground_state(build_tfim({8, Boundary::periodic, 0.5}));
  CHECK(c.energy == doctest::Approx(reference::kGroundL8G05).epsilon(1e-10));
}

TEST_CASE("evolve") {
  const Hamiltonian h = build_tfim({6, Boundary::periodic, 1.1});
  const SpectralDecomposition s = diagonalize(h);
  const StateVector psi = product_state_z(6, +1);
  CHECK((evolve(s, psi, 0.0).amplitudes - psi.amplitudes).cwiseAbs().maxCoeff() < 1e-14);

  StateVector eig{s.vectors.col(5).cast<Complex>()};
  CHECK(std::abs(std::abs(eig.amplitudes.dot(evolve(s, eig, 3.3).amplitudes)) - 1.0) < 1e-13);

  for (double t : {0.7, 2.9}) {
    const ComplexVector exact = oracle::propagator(h.dense(), t) * psi.amplitudes;
    CHECK((evolve(s, psi, t).amplitudes - exact).cwiseAbs().maxCoeff() < 1e-12);
  }
  // Composition.
  const StateVector a = evolve(s, evolve(s, psi, 1.2), 2.1);
  CHECK((a.amplitudes - evolve(s, psi, 3.3).amplitudes).cwiseAbs().maxCoeff() < 1e-10);

  const double g = 0.8;
  const SpectralDecomposition one = diagonalize(build_tfim({1, Boundary::open, g, 0.0}));
  for (double t : {0.3, 1.9, 4.4}) {
    const double echo = std::norm(product_state_z(1, +1).amplitudes.dot(evolve(one, product_state_z(1, +1), t).amplitudes));
    CHECK(echo == doctest::Approx(std::pow(std::cos(g * t / 2.0), 2)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(evolve(s, product_state_z(5, +1), 1.0), Error);
}

TEST_CASE("Krylov propagation") {
  const Hamiltonian h = build_tfim({10, Boundary::periodic, 1.5});
  const SpectralDecomposition s = diagonalize(h);
  const StateVector psi = product_state_z(10, +1);
  CHECK((krylov_evolve(h, psi, 0.0).amplitudes - psi.amplitudes).norm() == 0.0);
  for (double t : {0.5, 2.0, 5.0}) {
    CHECK((krylov_evolve(h, psi, t).amplitudes - evolve(s, psi, t).amplitudes).cwiseAbs().maxCoeff() < 1e-9);
  }
  KrylovOptions small;
  small.step = 0.01;
  const StateVector far = krylov_evolve(h, psi, 10.0, small);  // 1000 steps
  CHECK(std::abs(far.norm() - 1.0) < 1e-9);
  KrylovOptions starved;
  starved.max_steps = 3;
  CHECK_THROWS_AS(krylov_evolve(h, psi, 10.0, starved), Error);
  KrylovOptions tiny;
  tiny.subspace_dim = 1;
  CHECK_THROWS_AS(krylov_evolve(h, psi, 1.0, tiny), Error);
}

TEST_CASE("Loschmidt traces") {
  const TimeGrid grid{0.0, 10.0, 501};
  SUBCASE("eigenstate input") {
    const Hamiltonian h = build_tfim({6, Boundary::periodic, 0.9});
    const GroundState gs = ground_state(h);
    const LoschmidtTrace t = loschmidt_trace(h, gs.state, grid, 6);
    for (std::size_t i = 0; i < t.size(); ++i) {
      CHECK(std::abs(t.echo[i] - 1.0) < 1e-12);
      CHECK(t.rate[i] < 1e-12);
    }
  }
  SUBCASE("single spin") {
    const double g = 2.0;
    const LoschmidtTrace t = loschmidt_trace(build_tfim({1, Boundary::open, g, 0.0}), product_state_z(1, +1), grid, 1);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(std::abs(t.echo[i] - std::pow(std::cos(g * t.times[i] / 2), 2)) < 1e-13);
  }
  SUBCASE("L = 6 quench 0.1 -> 4 against scipy and free fermions") {
    const QuenchSpec q{0.1, 4.0, 6, Boundary::periodic, grid};
    const LoschmidtTrace ed = ed_quench_trace(q);
    CHECK(max_diff(ed.echo, free_fermion_quench_trace(q).echo) < 1e-8);
    for (const auto& [time, value] : reference::kEchoL6) {
      const LoschmidtTrace one = ed_quench_trace({0.1, 4.0, 6, Boundary::periodic, {0.0, time, 2}});
      CHECK(one.echo[1] == doctest::Approx(value).epsilon(1e-10));
    }
  }
  SUBCASE("polarized quenches against scipy") {
    for (const auto& [time, value] : reference::kPolarizedL6) {
      QuenchSpec q{0.0, 1.5, 6, Boundary::periodic, {0.0, time, 2}};
      q.initial = InitialState::polarized_z;
      CHECK(ed_quench_trace(q).echo[1] == doctest::Approx(value).epsilon(1e-10));
    }
    for (const auto& [time, value] : reference::kPolarizedOpenL5) {
      QuenchSpec q{0.0, 0.7, 5, Boundary::open, {0.0, time, 2}};
      q.initial = InitialState::polarized_z;
      CHECK(ed_quench_trace(q).echo[1] == doctest::Approx(value).epsilon(1e-10));
    }
  }
  SUBCASE("direct state overlap equals the coefficient-space form") {
    const Hamiltonian h = build_tfim({7, Boundary::open, 1.4});
    const SpectralDecomposition s = diagonalize(h);
    const StateVector psi = product_state_z(7, +1);
    const LoschmidtTrace t = loschmidt_trace(s, psi, grid, 7);
    for (int i = 0; i < 501; i += 50) {
      const double direct = std::norm(psi.amplitudes.dot(evolve(s, psi, t.times[i]).amplitudes));
      CHECK(std::abs(direct - t.echo[i]) < 1e-12);
    }
  }
  SUBCASE("evenness in time") {
    const Hamiltonian h = build_tfim({6, Boundary::periodic, 1.3});
    const StateVector psi = product_state_z(6, +1);
    const LoschmidtTrace fwd = loschmidt_trace(h, psi, {0.0, 5.0, 101}, 6);
    const LoschmidtTrace bwd = loschmidt_trace(h, psi, {-5.0, 0.0, 101}, 6);
    for (int i = 0; i < 101; ++i) CHECK(std::abs(fwd.echo[i] - bwd.echo[100 - i]) < 1e-12);
  }
  SUBCASE("zero echo becomes an infinite rate") {
    const std::vector<double> e = {0.0, 1.0};
    const std::vector<double> w = {0.5, 0.5};
    const LoschmidtTrace t = spectral_trace(e, w, {0.0, kPi, 2}, 1);
    CHECK(t.echo[1] < 1e-30);  // rounding leaves ~1e-33, a finite rate
    CHECK(t.rate[1] > 70.0);
    CHECK(std::isinf(rate_value(0.0, 1.0)));
    CHECK(rate_value(1.0 + 1e-13, 1.0) == 0.0);
  }
  SUBCASE("Krylov trace") {
    const Hamiltonian h = build_tfim({10, Boundary::periodic, 1.5});
    const StateVector psi = product_state_z(10, +1);
    const TimeGrid g{0.0, 5.0, 51};
    CHECK(max_diff(krylov_trace(h, psi, g, 10).echo, loschmidt_trace(h, psi, g, 10).echo) < 1e-9);
  }
}

TEST_CASE("ed_engine errors") {
  CHECK_THROWS_AS(diagonalize(build_tfim({15, Boundary::periodic, 1.0})), Error);
  RealMatrix asym = RealMatrix::Zero(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(diagonalize(asym), Error);
  CHECK_THROWS_AS(ed_quench_trace({0.5, 2.0, 16, Boundary::periodic, {}}), Error);
  CHECK_THROWS_AS(TimeGrid({1.0, 0.0, 10}).validate(), Error);
  CHECK_THROWS_AS(TimeGrid({0.0, 1.0, 1}).validate(), Error);
}
