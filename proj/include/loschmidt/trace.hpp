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
#ifndef LOSCHMIDT_TRACE_HPP
#define LOSCHMIDT_TRACE_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "loschmidt/spin_hamiltonian.hpp"

namespace loschmidt {

/// Uniform grid of sampling times, endpoints included.
struct TimeGrid {
  double t_start = 0.0;
  double t_end = 10.0;
  int n_points = 2001;

  void validate() const;
  double spacing() const { return (t_end - t_start) / (n_points - 1); }
  double at(int i) const { return t_start + i * spacing(); }
  std::vector<double> times() const;
};

/// Sampled survival probability and its rate function.
///
/// rate[i] = -ln(echo[i]) / size_L. An echo of exactly zero produces a rate of
/// +infinity, which downstream analysis treats as a dominating maximum.
struct LoschmidtTrace {
  std::vector<double> times;
  std::vector<double> echo;
  std::vector<double> rate;
  double size_L = 1.0;

  std::size_t size() const { return times.size(); }
};

/// Pre-quench state of a transverse-field Ising quench.
enum class InitialState {
  even_ground,  // ground state of H(g_initial) in the even spin-flip sector
  polarized_z,  // prod_i |+>^z_i, the symmetry-broken state of the g -> 0 limit
};

/// One sudden quench of the transverse-field Ising chain. The initial
/// Hamiltonian always has J = 1; the final one uses `interaction_final`.
struct QuenchSpec {
  double g_initial = 0.5;
  double g_final = 2.0;
  int sites = 8;
  Boundary boundary = Boundary::periodic;
  TimeGrid grid;
  double interaction_final = 1.0;
  InitialState initial = InitialState::even_ground;
};

/// -ln(echo)/size_L with echo clamped to at most 1; +inf for echo == 0.
double rate_value(double echo, double size_L);

/// Decimal rendering with 17 significant digits, or
/// "inf" for +infinity.
std::string format_number(double value);

/// CSV with header "t,echo,rate".
void write_trace_csv(std::ostream& out, const LoschmidtTrace& trace);
/// JSON object {"t":[...],"echo":[...],"rate":[...],"size_L":...}; infinite
/// rates are rendered as the string "inf".
void write_trace_json(std::ostream& out, const LoschmidtTrace& trace);

}  // namespace loschmidt

#endif  // LOSCHMIDT_TRACE_HPP
