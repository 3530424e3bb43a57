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
#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "loschmidt/ed_engine.hpp"
#include "loschmidt/error.hpp"
#include "loschmidt/spin_hamiltonian.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"

using namespace loschmidt;

namespace {

std::vector<double> sorted_eigenvalues(const RealMatrix& m) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(m, Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return v;
}

}  // namespace

TEST_CASE("two-site chains at zero field are diagonal") {
  const RealMatrix periodic = build_tfim({2, Boundary::periodic, 0.0}).dense();
  CHECK((periodic - RealMatrix(periodic.diagonal().asDiagonal())).cwiseAbs().maxCoeff() == 0.0);
  // Periodic L = 2 keeps both bonds of the literal sum.
  CHECK(periodic(0, 0) == doctest::Approx(-1.0));
  CHECK(periodic(1, 1) == doctest::Approx(1.0));
  CHECK(periodic(2, 2) == doctest::Approx(1.0));
  CHECK(periodic(3, 3) == doctest::Approx(-1.0));

  const RealMatrix open = build_tfim({2, Boundary::open, 0.0}).dense();
  CHECK(open(0, 0) == doctest::Approx(-0.5));
  CHECK(open(1, 1) == doctest::Approx(0.5));
  CHECK(open(2, 2) == doctest::Approx(0.5));
  CHECK(open(3, 3) == doctest::Approx(-0.5));
}

TEST_CASE("dense matrix equals the Kronecker-product construction") {
  for (int sites : {2, 3, 5, 6}) {
    for (double g : {0.0, 0.7, 2.5}) {
      for (bool periodic : {true, false}) {
        const RealMatrix h = build_tfim({sites, periodic ? Boundary::periodic : Boundary::open, g}).dense();
        CHECK((h - oracle::tfim(sites, g, 1.0, periodic)).cwiseAbs().maxCoeff() < 1e-14);
      }
    }
  }
  const RealMatrix h = build_tfim({4, Boundary::periodic, 1.2, 0.3}).dense();
  CHECK((h - oracle::tfim(4, 1.2, 0.3)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("L = 8 ground energies match the scipy reference") {
  CHECK(ground_state(build_tfim({8, Boundary::periodic, 0.5})).energy == doctest::Approx(reference::kGroundL8G05).epsilon(1e-12));
  CHECK(ground_state(build_tfim({8, Boundary::periodic, 1.0})).energy == doctest::Approx(reference::kGroundL8G1).epsilon(1e-12));
  CHECK(sorted_eigenvalues(oracle::tfim(8, 1.0)).front() == doctest::Approx(reference::kGroundL8G1).epsilon(1e-12));
}

TEST_CASE("term list export is ordered bonds first, then fields") {
  const nlohmann::json j = build_tfim({3, Boundary::open, 2.0}).terms().to_json();
  REQUIRE(j.size() == 5);
  CHECK(j[0]["pauli"] == "ZZI");
  CHECK(j[1]["pauli"] == "IZZ");
  CHECK(j[2]["pauli"] == "XII");
  CHECK(j[4]["pauli"] == "IIX");
  CHECK(j[0]["coeff"].get<double>() == -0.5);
  CHECK(j[2]["coeff"].get<double>() == -1.0);

  const nlohmann::json p = build_tfim({4, Boundary::periodic, 1.0}).terms().to_json();
  CHECK(p.size() == 8);
  CHECK(p[3]["pauli"] == "ZIIZ");
}

TEST_CASE("product states") {
  const StateVector up2 = product_state_z(2, +1);
  CHECK(up2.amplitudes[0] == Complex(1.0, 0.0));
  CHECK(up2.amplitudes.segment(1, 3).norm() == 0.0);

  const StateVector down1 = product_state_z(1, -1);
  CHECK(down1.dimension() == 2);
  CHECK(down1.amplitudes[1] == Complex(1.0, 0.0));
  CHECK(down1.amplitudes[0] == Complex(0.0, 0.0));

  const StateVector up3 = product_state_z(3, +1);
  const Hamiltonian h = build_tfim({3, Boundary::open, 0.0});
  const ComplexVector hpsi = h.apply(up3.amplitudes);
  CHECK((hpsi + up3.amplitudes).norm() < 1e-15);  // energy -1

  const StateVector x1 = product_state_x(1, +1);
  CHECK(x1.amplitudes[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(x1.amplitudes[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  const StateVector x2 = product_state_x(2, +1);
  for (int i = 0; i < 4; ++i) CHECK(x2.amplitudes[i].real() == doctest::Approx(0.5));
  const StateVector xm = product_state_x(2, -1);
  CHECK(xm.amplitudes[3].real() == doctest::Approx(0.5));
  CHECK(xm.amplitudes[1].real() == doctest::Approx(-0.5));

  for (int sites : {1, 4, 9}) {
    const double overlap = std::abs(product_state_x(sites, +1).amplitudes.dot(product_state_z(sites, +1).amplitudes));
    CHECK(overlap == doctest::Approx(std::pow(2.0, -0.5 * sites)).epsilon(1e-14));
    CHECK(std::abs(product_state_x(sites, -1).norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("invariants of built Hamiltonians") {
  SUBCASE("Hermiticity") {
    const Hamiltonian h = build_tfim({7, Boundary::periodic, 1.3});
    CHECK(h.hermiticity_defect() == 0.0);
    const RealMatrix d = h.dense();
    CHECK((d - d.transpose()).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("zero field commutes with every sigma^z") {
    const RealMatrix h = build_tfim({5, Boundary::periodic, 0.0}).dense();
    for (int i = 0; i < 5; ++i) {
      const oracle::Matrix z = oracle::site_op(oracle::pauli_z(), i, 5);
      CHECK((h * z - z * h).norm() < 1e-12);
    }
  }
  SUBCASE("sigma^x product states diagonalize the field-only Hamiltonian") {
    const double g = 1.7;
    const int sites = 6;
    const Hamiltonian h = build_tfim({sites, Boundary::periodic, g, 0.0});
    for (int sign : {+1, -1}) {
      const StateVector phi = product_state_x(sites, sign);
      const double e = -sign * g * sites / 2.0;
      CHECK((h.apply(phi.amplitudes) - e * phi.amplitudes).norm() < 1e-12);
    }
  }
  SUBCASE("spectrum invariant under the global flip") {
    const RealMatrix h = build_tfim({6, Boundary::open, 0.8}).dense();
    const oracle::Matrix f = oracle::global_flip(6);
    const auto a = sorted_eigenvalues(h);
    const auto b = sorted_eigenvalues(f * h * f);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12);
  }
}

TEST_CASE("matvec agrees with the dense matrix") {
  const Hamiltonian h = build_tfim({8, Boundary::periodic, 0.9, 1.1});
  ComplexVector v = ComplexVector::Zero(256);
  for (int i = 0; i < 256; ++i) v[i] = Complex(std::sin(0.3 * i), std::cos(0.7 * i));
  CHECK((h.apply(v) - h.dense().cast<Complex>() * v).norm() < 1e-12);
}

TEST_CASE("sector reduction") {
  const Hamiltonian h = build_tfim({6, Boundary::periodic, 0.6});
  const auto full = sorted_eigenvalues(h.dense());
  std::vector<double> both = sorted_eigenvalues(sector_hamiltonian(h, Parity::even));
  const auto odd = sorted_eigenvalues(sector_hamiltonian(h, Parity::odd));
  both.insert(both.end(), odd.begin(), odd.end());
  std::sort(both.begin(), both.end());
  for (std::size_t i = 0; i < full.size(); ++i) CHECK(std::abs(full[i] - both[i]) < 1e-12);

  ComplexVector s = ComplexVector::Zero(32);
  s[3] = 1.0;
  const ComplexVector e = embed_sector(s, 6, Parity::odd);
  CHECK((spin_flip({e}).amplitudes + e).norm() < 1e-15);
  CHECK((restrict_to_sector(e, 6, Parity::odd) - s).norm() < 1e-15);
}

TEST_CASE("sigma^x basis transform") {
  const StateVector x = to_sigma_x_basis(product_state_x(4, +1));
  CHECK(x.basis == Basis::sigma_x_product);
  CHECK(std::abs(std::abs(x.amplitudes[0]) - 1.0) < 1e-14);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(build_tfim({1, Boundary::periodic, 1.0}), Error);
  CHECK_THROWS_AS(build_tfim({kMaxSites + 1, Boundary::periodic, 1.0}), Error);
  CHECK_THROWS_AS(build_tfim({4, Boundary::periodic, std::nan("")}), Error);
  CHECK_THROWS_AS(build_tfim({kDenseSiteCap + 1, Boundary::periodic, 1.0}).dense(), Error);
  CHECK_NOTHROW(build_tfim({kDenseSiteCap + 1, Boundary::periodic, 1.0}));
  CHECK_THROWS_AS(product_state_z(0, 1), Error);
  CHECK_THROWS_AS(product_state_z(3, 0), Error);
  CHECK_THROWS_AS(PauliTerm::parse("XYZ", 1.0), Error);
  RealMatrix asym = RealMatrix::Identity(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(Hamiltonian::from_dense(asym), Error);
  try {
    build_tfim({1, Boundary::open, 1.0});
  } catch (const Error& e) {
    CHECK(e.module() == "spin_hamiltonian");
  }
}
