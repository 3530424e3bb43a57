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
#include "loschmidt/essential_states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <string>

#include "loschmidt/error.hpp"

namespace loschmidt {
namespace {

constexpr const char* kModule = "essential_states";

std::vector<double> poisson_probabilities(double mean, int n_max) {
  std::vector<double> p(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    p[static_cast<std::size_t>(n)] =
        mean > 0.0 ? std::exp(-mean + n * std::log(mean) - std::lgamma(n + 1.0)) : (n == 0 ? 1.0 : 0.0);
  }
  return p;
}

}  // namespace

void TwoLevelSpec::validate() const {
  if (!(splitting > 0.0) || !std::isfinite(splitting)) throw Error(kModule, "splitting must be positive");
  if (!(weight >= 0.0 && weight <= 1.0)) throw Error(kModule, "weight must lie in [0, 1]");
}

double two_level_echo(const TwoLevelSpec& spec, double t) {
  spec.validate();
  const double s = std::sin(0.5 * spec.splitting * t);
  return 1.0 - 4.0 * spec.weight * (1.0 - spec.weight) * s * s;
}

void LadderSpec::validate() const {
  if (amplitudes.empty()) throw Error(kModule, "ladder needs at least one level");
  if (!(spacing > 0.0) || !std::isfinite(spacing)) throw Error(kModule, "ladder spacing must be positive");
  double norm = 0.0;
  for (const auto& c : amplitudes) norm += std::norm(c);
  if (std::abs(norm - 1.0) > 1e-12) throw Error(kModule, "ladder amplitudes are not normalized");
}

LadderSpec LadderSpec::uniform(int levels, double spacing) {
  if (levels < 1) throw Error(kModule, "ladder needs at least one level");
  return {std::vector<Complex>(static_cast<std::size_t>(levels), Complex{1.0 / std::sqrt(double(levels)), 0.0}), spacing};
}

double ladder_echo(const LadderSpec& spec, double t) {
  spec.validate();
  // Reduce the phase per level modulo 2 pi so exact periods stay exact.
  const double step = std::remainder(spec.spacing * t, 2.0 * std::numbers::pi);
  Complex acc{0.0, 0.0};
  for (std::size_t n = 0; n < spec.amplitudes.size(); ++n) {
    acc += std::norm(spec.amplitudes[n]) * std::polar(1.0, -std::remainder(double(n) * step, 2.0 * std::numbers::pi));
  }
  return std::norm(acc);
}

BoseSiteSpec BoseSiteSpec::coherent(double mean_occupation, double interaction, double tail_tolerance) {
  if (!(mean_occupation > 0.0) || !std::isfinite(mean_occupation)) throw Error(kModule, "mean occupation must be positive");
  if (!(tail_tolerance > 0.0)) throw Error(kModule, "tail tolerance must be positive");
  const int generous = static_cast<int>(mean_occupation + 40.0 * std::sqrt(mean_occupation) + 60.0);
  const std::vector<double> p = poisson_probabilities(mean_occupation, generous);
  // Tail sums accumulated from the far end stay accurate below 1e-14.
  double tail = 0.0;
  int n_max = generous;
  for (int n = generous; n >= 0; --n) {
    if (tail + p[static_cast<std::size_t>(n)] >= tail_tolerance) {
      n_max = n;
      break;
    }
    tail += p[static_cast<std::size_t>(n)];
  }
  BoseSiteSpec spec = coherent_truncated(mean_occupation, interaction, n_max);
  spec.tail_mass = tail;
  return spec;
}

BoseSiteSpec BoseSiteSpec::coherent_truncated(double mean_occupation, double interaction, int n_max) {
  if (!(mean_occupation > 0.0) || !std::isfinite(mean_occupation)) throw Error(kModule, "mean occupation must be positive");
  if (!(interaction > 0.0) || !std::isfinite(interaction)) throw Error(kModule, "interaction U must be positive");
  if (n_max < 0) throw Error(kModule, "truncation must be non-negative");
  BoseSiteSpec spec;
  spec.mean_occupation = mean_occupation;
  spec.interaction = interaction;
  spec.truncation = n_max;
  spec.probabilities = poisson_probabilities(mean_occupation, n_max);
  double kept = 0.0;
  for (double q : spec.probabilities) kept += q;
  spec.tail_mass = std::max(0.0, 1.0 - kept);
  for (double& q : spec.probabilities) q /= kept;
  return spec;
}

double bose_site_echo(const BoseSiteSpec& spec, double t) {
  if (spec.probabilities.empty()) throw Error(kModule, "Bose site has no levels");
  // n (n - 1) / 2 is an integer, so the phase is that integer times U t.
  const double base = std::remainder(spec.interaction * t, 2.0 * std::numbers::pi);
  Complex acc{0.0, 0.0};
  for (std::size_t n = 0; n < spec.probabilities.size(); ++n) {
    const double pairs = 0.5 * double(n) * double(n == 0 ? 0 : n - 1);
    acc += spec.probabilities[n] * std::polar(1.0, -std::remainder(pairs * base, 2.0 * std::numbers::pi));
  }
  return std::norm(acc);
}

void ScarSpec::validate() const {
  if (tower_size < 2) throw Error(kModule, "scar tower needs at least 2 levels");
  if (background_size < 0) throw Error(kModule, "background size must be non-negative");
  if (!(spacing > 0.0)) throw Error(kModule, "tower spacing must be positive");
  if (!(background_bandwidth >= 0.0)) throw Error(kModule, "background bandwidth must be non-negative");
  if (!(coupling >= 0.0)) throw Error(kModule, "coupling must be non-negative");
  if (static_cast<std::size_t>(tower_size + background_size) > kDenseDimensionCap) {
    throw Error(kModule, "scar model exceeds the dense dimension cap");
  }
}

Hamiltonian build_scar_hamiltonian(const ScarSpec& spec) {
  spec.validate();
  const Eigen::Index nt = spec.tower_size, m = spec.background_size;
  RealMatrix h = RealMatrix::Zero(nt + m, nt + m);
  for (Eigen::Index n = 0; n < nt; ++n) h(n, n) = static_cast<double>(n) * spec.spacing;

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  if (m > 0) {
    // GOE: off-diagonal variance s^2, diagonal 2 s^2, semicircle radius 2 s sqrt(M).
    const double s = spec.background_bandwidth / (4.0 * std::sqrt(double(m)));
    const double centre = 0.5 * static_cast<double>(nt - 1) * spec.spacing;
    for (Eigen::Index i = 0; i < m; ++i) {
      h(nt + i, nt + i) = centre + std::sqrt(2.0) * s * normal(rng);
      for (Eigen::Index j = i + 1; j < m; ++j) h(nt + i, nt + j) = h(nt + j, nt + i) = s * normal(rng);
    }
  }
  for (Eigen::Index n = 0; n < nt; ++n) {
    for (Eigen::Index j = 0; j < m; ++j) h(n, nt + j) = h(nt + j, n) = spec.coupling * normal(rng);
  }
  return Hamiltonian::from_dense(std::move(h));
}

StateVector tower_state(const ScarSpec& spec) {
  spec.validate();
  StateVector s{ComplexVector::Zero(spec.tower_size + spec.background_size), Basis::fock};
  s.amplitudes.head(spec.tower_size).setConstant(1.0 / std::sqrt(double(spec.tower_size)));
  return s;
}

std::vector<OverlapEntry> scar_overlap_profile(const SpectralDecomposition& spectrum, const StateVector& psi0) {
  const ComplexVector alpha = spectral_overlaps(spectrum, psi0);
  std::vector<OverlapEntry> out(static_cast<std::size_t>(alpha.size()));
  for (Eigen::Index k = 0; k < alpha.size(); ++k) out[static_cast<std::size_t>(k)] = {spectrum.energies[k], std::norm(alpha[k])};
  return out;
}

std::vector<OverlapEntry> scar_overlap_profile(const Hamiltonian& h, const StateVector& psi0) {
  return scar_overlap_profile(diagonalize(h), psi0);
}

double top_weight(const std::vector<OverlapEntry>& profile, int count) {
  std::vector<double> w;
  w.reserve(profile.size());
  for (const auto& e : profile) w.push_back(e.weight);
  const auto k = std::min<std::size_t>(static_cast<std::size_t>(std::max(count, 0)), w.size());
  std::partial_sort(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k), w.end(), std::greater<>());
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) sum += w[i];
  return sum;
}

void write_overlap_csv(std::ostream& out, const std::vector<OverlapEntry>& profile) {
  out << "energy,weight\n";
  for (const auto& e : profile) out << format_number(e.energy) << ',' << format_number(e.weight) << '\n';
}

RevivalPeaks revival_peaks(const LoschmidtTrace& trace, double period) {
  if (!(period > 0.0)) throw Error(kModule, "revival period must be positive");
  RevivalPeaks peaks;
  if (trace.size() < 2) return peaks;
  const double t_end = trace.times.back();
  for (int m = 1; m * period <= t_end + 1e-12; ++m) {
    const double centre = m * period;
    double best = -1.0, best_t = centre, trough = 2.0;
    for (std::size_t i = 0; i < trace.size(); ++i) {
      const double t = trace.times[i];
      if (std::abs(t - centre) <= 0.25 * period && trace.echo[i] > best) {
        best = trace.echo[i];
        best_t = t;
      }
      if (t >= centre - 0.5 * period && t <= centre - 0.25 * period) trough = std::min(trough, trace.echo[i]);
    }
    if (best < 0.0) break;
    peaks.times.push_back(best_t);
    peaks.heights.push_back(best);
    peaks.distinct.push_back(best >= 2.0 * trough);
  }
  return peaks;
}

LoschmidtTrace sample_echo(const std::function<double(double)>& echo, const TimeGrid& grid, double size_L) {
  if (!(size_L > 0.0)) throw Error(kModule, "size_L must be positive");
  LoschmidtTrace trace;
  trace.size_L = size_L;
  trace.times = grid.times();
  for (double t : trace.times) {
    const double e = echo(t);
    trace.echo.push_back(e);
    trace.rate.push_back(rate_value(e, size_L));
  }
  return trace;
}

}  // namespace loschmidt
