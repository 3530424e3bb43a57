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
#ifndef LOSCHMIDT_ED_ENGINE_HPP
#define LOSCHMIDT_ED_ENGINE_HPP

#include <span>
#include <vector>

#include "loschmidt/spin_hamiltonian.hpp"
#include "loschmidt/trace.hpp"

namespace loschmidt {

/// Full spectrum of a real symmetric Hamiltonian. Columns of `vectors` are
/// orthonormal eigenvectors aligned with the ascending `energies`.
struct SpectralDecomposition {
  Eigen::VectorXd energies;
  RealMatrix vectors;

  std::size_t dimension() const { return static_cast<std::size_t>(energies.size()); }
};

struct GroundState {
  double energy = 0.0;
  StateVector state;
  double gap = 0.0;         // E_1 - E_0, +inf for a one-dimensional space
  bool degenerate = false;  // gap < 1e-10
};

/// Largest dimension accepted by the dense eigensolver.
inline constexpr std::size_t kDenseDimensionCap = std::size_t{1} << kDenseSiteCap;

SpectralDecomposition diagonalize(const RealMatrix& h);
SpectralDecomposition diagonalize(const Hamiltonian& h);

GroundState ground_state(const SpectralDecomposition& spectrum, Basis basis = Basis::sigma_z_product);
GroundState ground_state(const Hamiltonian& h);
/// Lowest eigenpair inside one spin-flip sector, embedded in the full space.
/// Used for the finite-size ferromagnet whose two lowest levels are split by
/// an exponentially small gap.
GroundState sector_ground_state(const Hamiltonian& h, Parity parity);

/// alpha_k = <psi_k|psi>.
ComplexVector spectral_overlaps(const SpectralDecomposition& spectrum, const StateVector& psi);

/// sum_k exp(-i E_k t) |psi_k><psi_k|psi>.
StateVector evolve(const SpectralDecomposition& spectrum, const StateVector& psi0, double t);

/// <psi0| exp(-i H t) |psi0> = sum_k w_k exp(-i E_k t).
Complex survival_amplitude(std::span<const double> energies, std::span<const double> weights, double t);

struct KrylovOptions {
  int subspace_dim = 24;
  double step = 0.1;          // largest attempted step
  double tolerance = 1e-10;   // local error estimate per accepted step
  int max_steps = 1000000;
};

/// Short-iterative-Lanczos propagation exp(-i H t)|psi0> using only matvecs.
/// Steps are halved until the Lanczos residual estimate falls below the
/// tolerance.
StateVector krylov_evolve(const Hamiltonian& h, const StateVector& psi0, double t,
                          const KrylovOptions& options = {});

/// Echo |sum_k w_k exp(-i E_k t)|^2 sampled on a grid.
LoschmidtTrace spectral_trace(std::span<const double> energies, std::span<const double> weights,
                              const TimeGrid& grid, double size_L);

/// Survival probability of psi0 under the Hamiltonian whose spectrum is
/// given. One projection, then O(dim) work per grid point.
LoschmidtTrace loschmidt_trace(const SpectralDecomposition& final_spectrum, const StateVector& psi0,
                               const TimeGrid& grid, double size_L);
LoschmidtTrace loschmidt_trace(const Hamiltonian& h_final, const StateVector& psi0, const TimeGrid& grid,
                               double size_L);

/// Krylov counterpart of loschmidt_trace for chains beyond the dense cap.
/// Steps the state from grid point to grid point.
LoschmidtTrace krylov_trace(const Hamiltonian& h_final, const StateVector& psi0, const TimeGrid& grid,
                            double size_L, const KrylovOptions& options = {});

/// Pre-quench state of a transverse-field Ising quench (J = 1 initially).
StateVector quench_initial_state(const QuenchSpec& quench);

/// Exact-diagonalization echo of a transverse-field Ising quench, computed
/// separately in each spin-flip sector the initial state occupies.
LoschmidtTrace ed_quench_trace(const QuenchSpec& quench);

}  // namespace loschmidt

#endif  // LOSCHMIDT_ED_ENGINE_HPP
