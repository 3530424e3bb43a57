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
#ifndef LOSCHMIDT_ESSENTIAL_STATES_HPP
#define LOSCHMIDT_ESSENTIAL_STATES_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "loschmidt/ed_engine.hpp"
#include "loschmidt/spin_hamiltonian.hpp"
#include "loschmidt/trace.hpp"

namespace loschmidt {

// Minimal level schemes whose survival probabilities reproduce the
// Loschmidt-rate structures of the many-body quenches.

/// Two levels at -+splitting/2; `weight` is the upper-level population.
struct TwoLevelSpec {
  double splitting = 1.0;
  double weight = 0.5;

  void validate() const;
};

/// 1 - 4 w (1 - w) sin^2(s t / 2); cos^2(s t / 2) for w = 1/2.
double two_level_echo(const TwoLevelSpec& spec, double t);

/// Equally spaced levels E_n = n * spacing with initial amplitudes c_n.
struct LadderSpec {
  std::vector<Complex> amplitudes;
  double spacing = 1.0;

  void validate() const;
  static LadderSpec uniform(int levels, double spacing);
};

/// |sum_n |c_n|^2 exp(-i n w t)|^2, periodic in t with period 2 pi / w.
double ladder_echo(const LadderSpec& spec, double t);

/// One Bose-Hubbard site after the tunnelling is switched off: a truncated
/// coherent state evolving under U n (n - 1) / 2.
struct BoseSiteSpec {
  double mean_occupation = 2.0;
  double interaction = 1.0;
  int truncation = 0;                 // N_max
  std::vector<double> probabilities;  // |c_n|^2, n = 0..N_max, normalized
  double tail_mass = 0.0;             // Poisson weight beyond N_max before renormalization

  /// Smallest N_max whose discarded Poisson tail is below `tail_tolerance`.
  static BoseSiteSpec coherent(double mean_occupation, double interaction, double tail_tolerance = 1e-14);
  /// Fixed truncation, for stability checks.
  static BoseSiteSpec coherent_truncated(double mean_occupation, double interaction, int n_max);
};

/// |sum_n |c_n|^2 exp(-i U n (n - 1) t / 2)|^2; exactly periodic with 2 pi / U.
double bose_site_echo(const BoseSiteSpec& spec, double t);

/// Tower of equally spaced levels weakly coupled to a random thermal block.
struct ScarSpec {
  int tower_size = 8;                // N_t
  int background_size = 512;         // M
  double spacing = 1.0;              // omega
  double background_bandwidth = 8.0; // W, full width of the GOE semicircle
  double coupling = 0.05;            // standard deviation of each tower-background element
  std::uint64_t seed = 1;

  void validate() const;
};

/// (N_t + M)-dimensional Hamiltonian. Tower block diag(0, w, ..., (N_t-1) w);
/// background a GOE matrix with semicircle radius W/2 centred on the middle of
/// the tower; off-diagonal blocks i.i.d. normal with standard deviation eps.
/// Deterministic for a given seed.
Hamiltonian build_scar_hamiltonian(const ScarSpec& spec);

/// Uniform superposition of the tower states.
StateVector tower_state(const ScarSpec& spec);

struct OverlapEntry {
  double energy;
  double weight;  // |<psi_k|psi0>|^2
};

/// Spectral weights of psi0, ascending in energy.
std::vector<OverlapEntry> scar_overlap_profile(const SpectralDecomposition& spectrum, const StateVector& psi0);
std::vector<OverlapEntry> scar_overlap_profile(const Hamiltonian& h, const StateVector& psi0);

/// Sum of the `count` largest weights.
double top_weight(const std::vector<OverlapEntry>& profile, int count);

void write_overlap_csv(std::ostream& out, const std::vector<OverlapEntry>& profile);

struct RevivalPeaks {
  std::vector<double> times;    // location of the echo maximum near m * period
  std::vector<double> heights;  // echo at that location
  std::vector<bool> distinct;   // maximum at least twice the preceding trough
};

/// Echo maxima within a quarter period of m * period, m = 1, 2, ..., for
/// every window the trace covers.
RevivalPeaks revival_peaks(const LoschmidtTrace& trace, double period);

/// Tabulate an echo function on a grid.
LoschmidtTrace sample_echo(const std::function<double(double)>& echo, const TimeGrid& grid, double size_L = 1.0);

}  // namespace loschmidt

#endif  // LOSCHMIDT_ESSENTIAL_STATES_HPP
