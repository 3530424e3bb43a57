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
#ifndef LOSCHMIDT_FREE_FERMION_HPP
#define LOSCHMIDT_FREE_FERMION_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "loschmidt/trace.hpp"

namespace loschmidt {

// Jordan-Wigner solution of H = -(J/2) sum Z Z - (g/2) sum X on a periodic
// chain. Each momentum pair (k, -k) is a two-level system spanned by the empty
// pair and the doubly occupied pair, with quasiparticle energy
//
//   eps_k(g, J) = sqrt((g - J cos k)^2 + (J sin k)^2)
//
// and Bogoliubov angle tan(2 theta_k) = J sin k / (g - J cos k). A quench
// g0 -> gf leaves pair k in a superposition whose survival probability is
//
//   L_k(t) = 1 - sin^2(2 dtheta_k) sin^2(eps_k(gf) t),   dtheta = theta(gf) - theta(g0).

/// Quasiparticle energy of momentum k.
double dispersion(double g, double interaction, double k);
/// Bogoliubov angle theta_k in [0, pi/2].
double bogoliubov_angle(double g, double interaction, double k);

struct FermionModeSet {
  int sites = 0;
  double g_initial = 0.0;
  double g_final = 0.0;
  double interaction_initial = 1.0;
  double interaction_final = 1.0;
  std::vector<double> momenta;  // (2n - 1) pi / L, n = 1..L/2
  std::vector<double> dispersion_initial;
  std::vector<double> dispersion_final;
  std::vector<double> angle_mismatch;

  std::size_t size() const { return momenta.size(); }
};

/// Modes of the even spin-flip sector (antiperiodic fermions).
FermionModeSet build_modes(double g0, double gf, int sites, double interaction_initial = 1.0,
                           double interaction_final = 1.0);

/// Survival probability of one momentum pair.
double mode_echo(const FermionModeSet& modes, std::size_t k_index, double t);

/// Echo prod_k L_k(t) of the even-sector ground state of H(g0); size_L = L.
LoschmidtTrace finite_trace(const FermionModeSet& modes, const TimeGrid& grid);

/// Echo of (|GS_even(g0)> + |GS_odd(g0)>)/sqrt(2) combining both parity
/// sectors with their relative energy offset. For g0 = 0 (J0 = 1) this state
/// is prod_i |+>^z_i.
LoschmidtTrace symmetry_broken_trace(double g0, double gf, int sites, const TimeGrid& grid,
                                     double interaction_final = 1.0);

/// Dispatch on quench.initial; periodic chains only.
LoschmidtTrace free_fermion_quench_trace(const QuenchSpec& quench);

struct ThermoRateTrace {
  std::vector<double> times;
  std::vector<double> rate;
  std::vector<double> error_estimate;  // per time point
  int quadrature_nodes = 0;            // initial nodes before refinement
  double max_error = 0.0;
};

/// r(t) = -(1/2pi) int_0^pi ln L_k(t) dk by composite Gauss-Legendre panels,
/// split at the critical momentum and bisected until each panel meets its
/// share of `tolerance`.
ThermoRateTrace thermo_rate(double g0, double gf, const TimeGrid& grid, int nodes, double tolerance = 1e-8);

struct CriticalTimes {
  double g0 = 0.0;
  double gf = 0.0;
  std::optional<double> k_star;  // empty: no critical mode
  std::vector<double> t_star;

  nlohmann::json to_json() const;
};

/// Zeros t*_n = (2n + 1) pi / (2 eps_{k*}(gf)) of the critical mode, where
/// sin^2(2 dtheta_{k*}) = 1, i.e. cos k* = (1 + g0 gf) / (g0 + gf).
CriticalTimes critical_times(double g0, double gf, int n_max);

}  // namespace loschmidt

#endif  // LOSCHMIDT_FREE_FERMION_HPP
