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
#include "loschmidt/ed_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>

#include "loschmidt/error.hpp"

namespace loschmidt {
namespace {

constexpr const char* kModule = "ed_engine";

void check_state(const SpectralDecomposition& spectrum, const StateVector& psi) {
  if (psi.dimension() != spectrum.dimension()) {
    throw Error(kModule, "state dimension " + std::to_string(psi.dimension()) +
                             " does not match Hamiltonian dimension " + std::to_string(spectrum.dimension()));
  }
}

}  // namespace

SpectralDecomposition diagonalize(const RealMatrix& h) {
  if (h.rows() != h.cols() || h.rows() == 0) throw Error(kModule, "Hamiltonian must be a non-empty square matrix");
  if (static_cast<std::size_t>(h.rows()) > kDenseDimensionCap) {
    throw Error(kModule, "dimension " + std::to_string(h.rows()) + " exceeds the dense cap " +
                             std::to_string(kDenseDimensionCap));
  }
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw Error(kModule, "Hamiltonian is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<RealMatrix> solver(h, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw Error(kModule, "eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

SpectralDecomposition diagonalize(const Hamiltonian& h) {
  if (h.dimension() > kDenseDimensionCap) {
    throw Error(kModule, "dimension " + std::to_string(h.dimension()) + " exceeds the dense cap " +
                             std::to_string(kDenseDimensionCap) + "; use Krylov propagation");
  }
  return diagonalize(h.dense());
}

GroundState ground_state(const SpectralDecomposition& spectrum, Basis basis) {
  GroundState gs;
  gs.energy = spectrum.energies[0];
  gs.state = StateVector{spectrum.vectors.col(0).cast<Complex>(), basis};
  gs.gap = spectrum.dimension() > 1 ? spectrum.energies[1] - spectrum.energies[0]
                                    : std::numeric_limits<double>::infinity();
  gs.degenerate = gs.gap < 1e-10;
  return gs;
}

GroundState ground_state(const Hamiltonian& h) {
  return ground_state(diagonalize(h), h.has_terms() ? Basis::sigma_z_product : Basis::fock);
}

GroundState sector_ground_state(const Hamiltonian& h, Parity parity) {
  const int sites = h.terms().sites();
  if (sites > kDenseSiteCap) throw Error(kModule, "sector ground state beyond the dense cap");
  GroundState gs = ground_state(diagonalize(sector_hamiltonian(h, parity)));
  gs.state.amplitudes = embed_sector(gs.state.amplitudes, sites, parity);
  return gs;
}

ComplexVector spectral_overlaps(const SpectralDecomposition& spectrum, const StateVector& psi) {
  check_state(spectrum, psi);
  return spectrum.vectors.transpose().cast<Complex>() * psi.amplitudes;
}

StateVector evolve(const SpectralDecomposition& spectrum, const StateVector& psi0, double t) {
  ComplexVector alpha = spectral_overlaps(spectrum, psi0);
  for (Eigen::Index k = 0; k < alpha.size(); ++k) alpha[k] *= std::polar(1.0, -spectrum.energies[k] * t);
  return {spectrum.vectors.cast<Complex>() * alpha, psi0.basis};
}

Complex survival_amplitude(std::span<const double> energies, std::span<const double> weights, double t) {
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < energies.size(); ++k) acc += weights[k] * std::polar(1.0, -energies[k] * t);
  return acc;
}

StateVector krylov_evolve(const Hamiltonian& h, const StateVector& psi0, double t, const KrylovOptions& options) {
  if (psi0.dimension() != h.dimension()) throw Error(kModule, "state dimension does not match Hamiltonian");
  if (options.subspace_dim < 2) throw Error(kModule, "Krylov subspace dimension must be at least 2");
  if (!(options.step > 0.0)) throw Error(kModule, "Krylov step must be positive");
  const Eigen::Index n = psi0.amplitudes.size();
  const int m_max = static_cast<int>(std::min<Eigen::Index>(options.subspace_dim, n));

  ComplexVector psi = psi0.amplitudes;
  double done = 0.0;
  const double direction = t < 0 ? -1.0 : 1.0;
  const double total = std::abs(t);
  double tau = std::min(options.step, total);
  int steps = 0;

  Eigen::MatrixXcd basis(n, m_max);
  while (done < total) {
    const double beta0 = psi.norm();
    if (beta0 == 0.0) break;
    // Lanczos with full reorthogonalization.
    basis.col(0) = psi / beta0;
    std::vector<double> alpha, beta;
    double residual = 0.0;
    int m = 0;
    for (int j = 0; j < m_max; ++j) {
      ComplexVector w = h.apply(basis.col(j));
      alpha.push_back(basis.col(j).dot(w).real());
      for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i <= j; ++i) w -= basis.col(i).dot(w) * basis.col(i);
      }
      const double b = w.norm();
      m = j + 1;
      residual = b;
      if (b < 1e-14 * std::max(1.0, std::abs(alpha.back()))) {
        residual = 0.0;  // invariant subspace: the projection is exact
        break;
      }
      if (j + 1 < m_max) {
        beta.push_back(b);
        basis.col(j + 1) = w / b;
      }
    }
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) tri(i, i) = alpha[static_cast<std::size_t>(i)];
    for (int i = 0; i + 1 < m; ++i) tri(i, i + 1) = tri(i + 1, i) = beta[static_cast<std::size_t>(i)];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(tri);

    auto propagate = [&](double dt) {
      Eigen::VectorXcd c = small.eigenvectors().row(0).transpose().cast<Complex>();
      for (int i = 0; i < m; ++i) c[i] *= std::polar(1.0, -direction * small.eigenvalues()[i] * dt);
      return Eigen::VectorXcd(small.eigenvectors().cast<Complex>() * c);
    };

    tau = std::min(tau, total - done);
    Eigen::VectorXcd y;
    while (true) {
      if (++steps > options.max_steps) {
        throw Error(kModule, "Krylov propagation did not converge within " + std::to_string(options.max_steps) +
                                 " steps");
      }
      y = propagate(tau);
      const double err = beta0 * residual * std::abs(y[m - 1]);
      if (err <= options.tolerance) break;
      tau *= 0.5;
    }
    psi = beta0 * (basis.leftCols(m) * y);
    done += tau;
    if (total - done < 1e-15 * std::max(1.0, total)) done = total;
    tau = std::min(2.0 * tau, options.step);
  }
  return {psi, psi0.basis};
}

LoschmidtTrace spectral_trace(std::span<const double> energies, std::span<const double> weights,
                              const TimeGrid& grid, double size_L) {
  grid.validate();
  if (energies.size() != weights.size()) throw Error(kModule, "energy and weight lists differ in length");
  if (!(size_L > 0.0)) throw Error(kModule, "size_L must be positive");
  LoschmidtTrace trace;
  trace.size_L = size_L;
  trace.times = grid.times();
  const auto n = static_cast<std::int64_t>(trace.times.size());
  trace.echo.resize(trace.times.size());
  trace.rate.resize(trace.times.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    trace.echo[idx] = std::norm(survival_amplitude(energies, weights, trace.times[idx]));
    trace.rate[idx] = rate_value(trace.echo[idx], size_L);
  }
  return trace;
}

LoschmidtTrace loschmidt_trace(const SpectralDecomposition& final_spectrum, const StateVector& psi0,
                               const TimeGrid& grid, double size_L) {
  const ComplexVector alpha = spectral_overlaps(final_spectrum, psi0);
  std::vector<double> energies(final_spectrum.energies.begin(), final_spectrum.energies.end());
  std::vector<double> weights(static_cast<std::size_t>(alpha.size()));
  for (Eigen::Index k = 0; k < alpha.size(); ++k) weights[static_cast<std::size_t>(k)] = std::norm(alpha[k]);
  return spectral_trace(energies, weights, grid, size_L);
}

LoschmidtTrace loschmidt_trace(const Hamiltonian& h_final, const StateVector& psi0, const TimeGrid& grid,
                               double size_L) {
  return loschmidt_trace(diagonalize(h_final), psi0, grid, size_L);
}

LoschmidtTrace krylov_trace(const Hamiltonian& h_final, const StateVector& psi0, const TimeGrid& grid,
                            double size_L, const KrylovOptions& options) {
  grid.validate();
  if (!(size_L > 0.0)) throw Error(kModule, "size_L must be positive");
  LoschmidtTrace trace;
  trace.size_L = size_L;
  trace.times = grid.times();
  StateVector psi = grid.t_start == 0.0 ? psi0 : krylov_evolve(h_final, psi0, grid.t_start, options);
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    if (i > 0) psi = krylov_evolve(h_final, psi, grid.spacing(), options);
    const double e = std::norm(psi0.amplitudes.dot(psi.amplitudes));
    trace.echo.push_back(e);
    trace.rate.push_back(rate_value(e, size_L));
  }
  return trace;
}

StateVector quench_initial_state(const QuenchSpec& quench) {
  if (quench.initial == InitialState::polarized_z) return product_state_z(quench.sites, +1);
  const Hamiltonian h0 = build_tfim({quench.sites, quench.boundary, quench.g_initial, 1.0});
  return sector_ground_state(h0, Parity::even).state;
}

LoschmidtTrace ed_quench_trace(const QuenchSpec& quench) {
  if (quench.sites > kDenseSiteCap) {
    throw Error(kModule, "L = " + std::to_string(quench.sites) + " exceeds the dense cap of " +
                             std::to_string(kDenseSiteCap) + " sites");
  }
  const StateVector psi0 = quench_initial_state(quench);
  const Hamiltonian hf = build_tfim({quench.sites, quench.boundary, quench.g_final, quench.interaction_final});
  std::vector<double> energies, weights;
  for (Parity parity : {Parity::even, Parity::odd}) {
    const ComplexVector part = restrict_to_sector(psi0.amplitudes, quench.sites, parity);
    if (part.squaredNorm() < 1e-28) continue;
    const SpectralDecomposition spectrum = diagonalize(sector_hamiltonian(hf, parity));
    const ComplexVector alpha = spectrum.vectors.transpose().cast<Complex>() * part;
    for (Eigen::Index k = 0; k < alpha.size(); ++k) {
      energies.push_back(spectrum.energies[k]);
      weights.push_back(std::norm(alpha[k]));
    }
  }
  return spectral_trace(energies, weights, quench.grid, quench.sites);
}

}  // namespace loschmidt
