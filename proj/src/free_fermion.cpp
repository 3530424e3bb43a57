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
#include "loschmidt/free_fermion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "loschmidt/error.hpp"

namespace loschmidt {
namespace {

constexpr const char* kModule = "free_fermion";
constexpr double kPi = std::numbers::pi;

void check_couplings(double g0, double gf) {
  if (!(g0 >= 0.0) || !(gf >= 0.0) || !std::isfinite(g0) || !std::isfinite(gf)) {
    throw Error(kModule, "fields must be finite and non-negative");
  }
}

void check_even_sites(int sites) {
  if (sites < 2 || sites % 2 != 0) throw Error(kModule, "L must be even and at least 2, got " + std::to_string(sites));
}

// (sin 2 dtheta, cos 2 dtheta) from the Bloch vectors (g - J cos k, J sin k)/eps.
struct Mismatch {
  double sine = 0.0;
  double cosine = 1.0;
};

Mismatch mismatch(double g0, double j0, double gf, double jf, double k) {
  const double e0 = dispersion(g0, j0, k);
  const double ef = dispersion(gf, jf, k);
  if (e0 == 0.0 || ef == 0.0) return {};
  const double c0 = (g0 - j0 * std::cos(k)) / e0, s0 = j0 * std::sin(k) / e0;
  const double cf = (gf - jf * std::cos(k)) / ef, sf = jf * std::sin(k) / ef;
  return {sf * c0 - cf * s0, cf * c0 + sf * s0};
}

// 1 - sin^2(2 dtheta) sin^2(eps t), written without the cancellation that
// would otherwise swamp the critical mode near its zeros.
double mode_probability(const Mismatch& m, double eps_final, double t) {
  const double s = std::sin(eps_final * t), c = std::cos(eps_final * t);
  return c * c + m.cosine * m.cosine * s * s;
}

// <pair|exp(-i h_k t)|pair> including the pair's constant energy g - J cos k.
Complex pair_amplitude(double g0, double j0, double gf, double jf, double k, double t) {
  const double dtheta = bogoliubov_angle(gf, jf, k) - bogoliubov_angle(g0, j0, k);
  const double c2 = std::cos(dtheta) * std::cos(dtheta);
  const double s2 = 1.0 - c2;
  const double eps = dispersion(gf, jf, k);
  const double offset = gf - jf * std::cos(k);
  return std::polar(1.0, -offset * t) * (c2 * std::polar(1.0, eps * t) + s2 * std::polar(1.0, -eps * t));
}

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
struct GaussRule {
  std::vector<double> x, w;
};

GaussRule gauss_legendre(int n) {
  GaussRule rule{std::vector<double>(static_cast<std::size_t>(n)), std::vector<double>(static_cast<std::size_t>(n))};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(n - 1 - i);
    rule.x[a] = -z;
    rule.x[b] = z;
    rule.w[a] = rule.w[b] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return rule;
}

constexpr int kPanelOrder = 16;
constexpr int kMaxDepth = 48;

}  // namespace

double dispersion(double g, double interaction, double k) {
  const double a = g - interaction * std::cos(k);
  const double b = interaction * std::sin(k);
  return std::hypot(a, b);
}

double bogoliubov_angle(double g, double interaction, double k) {
  return 0.5 * std::atan2(interaction * std::sin(k), g - interaction * std::cos(k));
}

FermionModeSet build_modes(double g0, double gf, int sites, double interaction_initial, double interaction_final) {
  check_even_sites(sites);
  check_couplings(g0, gf);
  FermionModeSet m;
  m.sites = sites;
  m.g_initial = g0;
  m.g_final = gf;
  m.interaction_initial = interaction_initial;
  m.interaction_final = interaction_final;
  for (int n = 1; n <= sites / 2; ++n) {
    const double k = (2.0 * n - 1.0) * kPi / sites;
    m.momenta.push_back(k);
    m.dispersion_initial.push_back(dispersion(g0, interaction_initial, k));
    m.dispersion_final.push_back(dispersion(gf, interaction_final, k));
    m.angle_mismatch.push_back(bogoliubov_angle(gf, interaction_final, k) - bogoliubov_angle(g0, interaction_initial, k));
  }
  return m;
}

double mode_echo(const FermionModeSet& modes, std::size_t k_index, double t) {
  if (k_index >= modes.size()) throw Error(kModule, "mode index " + std::to_string(k_index) + " out of range");
  const double d = 2.0 * modes.angle_mismatch[k_index];
  return mode_probability({std::sin(d), std::cos(d)}, modes.dispersion_final[k_index], t);
}

LoschmidtTrace finite_trace(const FermionModeSet& modes, const TimeGrid& grid) {
  LoschmidtTrace trace;
  trace.size_L = modes.sites;
  trace.times = grid.times();
  trace.echo.resize(trace.times.size());
  trace.rate.resize(trace.times.size());
  std::vector<Mismatch> mm(modes.size());
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const double d = 2.0 * modes.angle_mismatch[k];
    mm[k] = {std::sin(d), std::cos(d)};
  }
  const auto n = static_cast<std::int64_t>(trace.times.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    double log_echo = 0.0;
    for (std::size_t k = 0; k < modes.size(); ++k) {
      const double p = mode_probability(mm[k], modes.dispersion_final[k], trace.times[idx]);
      if (p <= 0.0) {
        log_echo = -std::numeric_limits<double>::infinity();
        break;
      }
      log_echo += std::log(std::min(p, 1.0));
    }
    trace.echo[idx] = std::exp(log_echo);
    trace.rate[idx] = std::isinf(log_echo) ? std::numeric_limits<double>::infinity() : -log_echo / modes.sites;
  }
  return trace;
}

LoschmidtTrace symmetry_broken_trace(double g0, double gf, int sites, const TimeGrid& grid,
                                     double interaction_final) {
  check_even_sites(sites);
  check_couplings(g0, gf);
  const double jf = interaction_final;
  LoschmidtTrace trace;
  trace.size_L = sites;
  trace.times = grid.times();
  for (double t : trace.times) {
    // Even sector: antiperiodic momenta, every pair in its BCS ground state.
    Complex even{1.0, 0.0};
    for (int n = 1; n <= sites / 2; ++n) even *= pair_amplitude(g0, 1.0, gf, jf, (2.0 * n - 1.0) * kPi / sites, t);
    // Odd sector: periodic momenta; the unpaired k = 0 mode is occupied,
    // k = pi is empty.
    Complex odd = std::polar(1.0, -(gf - jf) * t);
    for (int n = 1; n < sites / 2; ++n) odd *= pair_amplitude(g0, 1.0, gf, jf, 2.0 * n * kPi / sites, t);
    const double e = std::norm(0.5 * (even + odd));
    trace.echo.push_back(e);
    trace.rate.push_back(rate_value(e, sites));
  }
  return trace;
}

LoschmidtTrace free_fermion_quench_trace(const QuenchSpec& quench) {
  if (quench.boundary != Boundary::periodic) throw Error(kModule, "the free-fermion route needs a periodic chain");
  if (quench.initial == InitialState::polarized_z) {
    return symmetry_broken_trace(0.0, quench.g_final, quench.sites, quench.grid, quench.interaction_final);
  }
  return finite_trace(build_modes(quench.g_initial, quench.g_final, quench.sites, 1.0, quench.interaction_final),
                      quench.grid);
}

ThermoRateTrace thermo_rate(double g0, double gf, const TimeGrid& grid, int nodes, double tolerance) {
  check_couplings(g0, gf);
  if (nodes < 64) throw Error(kModule, "thermo_rate needs at least 64 quadrature nodes");
  if (!(tolerance > 0.0)) throw Error(kModule, "quadrature tolerance must be positive");
  const GaussRule rule = gauss_legendre(kPanelOrder);

  std::vector<double> breaks;
  const int panels = std::max(1, nodes / kPanelOrder);
  for (int p = 0; p <= panels; ++p) breaks.push_back(kPi * p / panels);
  const CriticalTimes crit = critical_times(g0, gf, 0);
  if (crit.k_star) {
    breaks.push_back(*crit.k_star);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(), [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                 breaks.end());
  }

  ThermoRateTrace out;
  out.quadrature_nodes = nodes;
  out.times = grid.times();
  out.rate.resize(out.times.size());
  out.error_estimate.resize(out.times.size());

  const auto n = static_cast<std::int64_t>(out.times.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    const double t = out.times[static_cast<std::size_t>(i)];
    auto integrand = [&](double k) {
      const double p = mode_probability(mismatch(g0, 1.0, gf, 1.0, k), dispersion(gf, 1.0, k), t);
      return -std::log(std::max(p, std::numeric_limits<double>::min()));
    };
    auto panel = [&](double a, double b) {
      const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
      double s = 0.0;
      for (int j = 0; j < kPanelOrder; ++j) {
        s += rule.w[static_cast<std::size_t>(j)] * integrand(mid + half * rule.x[static_cast<std::size_t>(j)]);
      }
      return s * half;
    };
    // ln L_k dips towards a log singularity wherever eps_k t = (n + 1/2) pi;
    // putting those momenta on panel edges keeps the bisection estimate honest.
    std::vector<double> edges = breaks;
    const double e_lo = std::abs(gf - 1.0), e_hi = gf + 1.0;
    if (t > 0.0 && gf > 0.0) {
      for (int m = static_cast<int>(std::ceil(e_lo * t / kPi - 0.5)); (m + 0.5) * kPi / t <= e_hi; ++m) {
        const double e = (m + 0.5) * kPi / t;
        if (e < e_lo) continue;
        const double c = std::clamp((gf * gf + 1.0 - e * e) / (2.0 * gf), -1.0, 1.0);
        edges.push_back(std::acos(c));
      }
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end(), [](double a, double b) { return b - a < 1e-12; }), edges.end());
    }
    double total = 0.0, error = 0.0;
    struct Job {
      double a, b, coarse;
      int depth;
    };
    std::vector<Job> stack;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) stack.push_back({edges[p], edges[p + 1], panel(edges[p], edges[p + 1]), 0});
    // Integral tolerance per unit k. Coarse/fine agreement on a single panel
    // can be accidental at the requested level, so bisect to 1% of it.
    const double density = 0.01 * 2.0 * tolerance;
    while (!stack.empty()) {
      const Job job = stack.back();
      stack.pop_back();
      const double mid = 0.5 * (job.a + job.b);
      const double left = panel(job.a, mid), right = panel(mid, job.b);
      const double diff = std::abs(left + right - job.coarse);
      if (diff <= density * (job.b - job.a) || job.depth >= kMaxDepth) {
        total += left + right;
        error += diff;
      } else {
        stack.push_back({job.a, mid, left, job.depth + 1});
        stack.push_back({mid, job.b, right, job.depth + 1});
      }
    }
    out.rate[static_cast<std::size_t>(i)] = total / (2.0 * kPi);
    out.error_estimate[static_cast<std::size_t>(i)] = error / (2.0 * kPi);
  }
  out.max_error = *std::max_element(out.error_estimate.begin(), out.error_estimate.end());
  return out;
}

CriticalTimes critical_times(double g0, double gf, int n_max) {
  check_couplings(g0, gf);
  if (n_max < 0) throw Error(kModule, "n_max must be non-negative");
  CriticalTimes out{g0, gf, std::nullopt, {}};
  // sin^2(2 dtheta_k) = 1 where the numerator of cos(2 dtheta_k),
  // g0 gf - (g0 + gf) cos k + 1, vanishes.
  const double denom = g0 + gf;
  if (denom == 0.0) return out;
  const double cos_k = (1.0 + g0 * gf) / denom;
  if (!(cos_k > -1.0 && cos_k < 1.0)) return out;
  const double k = std::acos(cos_k);
  const double check = mismatch(g0, 1.0, gf, 1.0, k).cosine;
  if (std::abs(check) > 1e-9) {
    throw Error(kModule, "critical momentum failed verification (cos 2 dtheta = " + std::to_string(check) + ")");
  }
  out.k_star = k;
  const double eps = dispersion(gf, 1.0, k);
  for (int j = 0; j < n_max; ++j) out.t_star.push_back((2.0 * j + 1.0) * kPi / (2.0 * eps));
  return out;
}

nlohmann::json CriticalTimes::to_json() const {
  nlohmann::json j;
  j["g0"] = g0;
  j["gf"] = gf;
  j["k_star"] = k_star ? nlohmann::json(*k_star) : nlohmann::json(nullptr);
  j["t_star"] = t_star;
  return j;
}

}  // namespace loschmidt
