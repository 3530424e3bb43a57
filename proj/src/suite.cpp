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
#include "loschmidt/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "loschmidt/ed_engine.hpp"
#include "loschmidt/essential_states.hpp"
#include "loschmidt/free_fermion.hpp"
#include "loschmidt/rate_analysis.hpp"
#include "loschmidt/spin_hamiltonian.hpp"

namespace loschmidt {
namespace {

constexpr double kPi = std::numbers::pi;

template <typename Body>
CheckResult timed(int id, const char* name, double budget, Body&& body) {
  CheckResult r;
  r.id = id;
  r.name = name;
  r.budget_seconds = budget;
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
    ok = false;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds > budget) detail << " [over budget " << budget << " s]";
  r.passed = ok && r.seconds <= budget;
  r.detail = detail.str();
  return r;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

CheckResult check_product_formula_cusps() {
  return timed(1, "product-formula cusps", 1.0, [](std::ostringstream& out) {
    const double g = 2.0;
    const TimeGrid grid{0.0, 8.0, 1601};  // dt = 0.005
    const TwoLevelSpec site{g, 0.5};
    const LoschmidtTrace trace = rate_from_echo(sample_echo([&](double t) { return two_level_echo(site, t); }, grid));
    double rate_err = 0.0;
    for (std::size_t i = 0; i < trace.size(); ++i) {
      const double expect = -2.0 * std::log(std::abs(std::cos(0.5 * g * trace.times[i])));
      if (std::isfinite(expect)) rate_err = std::max(rate_err, std::abs(trace.rate[i] - expect));
    }
    const CuspReport report = detect_cusps(trace);
    const std::vector<double> cusps = report.cusps();
    bool ok = rate_err < 1e-10;
    for (int k = 0; k <= 2; ++k) {
      const double target = (2 * k + 1) * kPi / g;
      double nearest = 1e9;
      for (double c : cusps) nearest = std::min(nearest, std::abs(c - target));
      ok = ok && nearest <= grid.spacing();
      out << "t*_" << k << " miss " << sci(nearest) << "; ";
    }
    out << "rate err " << sci(rate_err) << ", cusps found " << cusps.size();
    return ok;
  });
}

CheckResult check_oracle_equivalence() {
  return timed(2, "ED vs free-fermion echoes", 60.0, [](std::ostringstream& out) {
    const TimeGrid grid{0.0, 10.0, 2001};
    double worst = 0.0;
    for (int sites : {8, 10, 12}) {
      for (auto [g0, gf] : {std::pair{0.1, 4.0}, {0.5, 2.0}, {2.0, 0.5}}) {
        const QuenchSpec q{g0, gf, sites, Boundary::periodic, grid};
        worst = std::max(worst, max_abs_diff(ed_quench_trace(q).echo, free_fermion_quench_trace(q).echo));
      }
    }
    out << "max |echo_ED - echo_FF| = " << sci(worst) << " (tol 1e-8)";
    return worst < 1e-8;
  });
}

CheckResult check_deep_quench_limit() {
  return timed(3, "deep-quench cos^{2L} limit", 10.0, [](std::ostringstream& out) {
    const int sites = 10;
    const double g = 3.0;
    QuenchSpec q{0.0, g, sites, Boundary::periodic, {0.0, 10.0, 2001}};
    q.interaction_final = 0.0;
    q.initial = InitialState::polarized_z;
    const LoschmidtTrace ed = ed_quench_trace(q);
    const LoschmidtTrace ff = free_fermion_quench_trace(q);
    double ed_err = 0.0, ff_err = 0.0;
    for (std::size_t i = 0; i < ed.size(); ++i) {
      const double expect = std::pow(std::cos(0.5 * g * ed.times[i]), 2 * sites);
      ed_err = std::max(ed_err, std::abs(ed.echo[i] - expect));
      ff_err = std::max(ff_err, std::abs(ff.echo[i] - expect));
    }
    out << "ED err " << sci(ed_err) << ", FF err " << sci(ff_err) << " (tol 1e-10)";
    return ed_err < 1e-10 && ff_err < 1e-10;
  });
}

CheckResult check_thermodynamic_cusps() {
  return timed(4, "thermodynamic cusps iff crossing g=1", 120.0, [](std::ostringstream& out) {
    const TimeGrid fine{0.0, 6.0, 12001};
    auto thermo_trace = [&](double g0, double gf) {
      const ThermoRateTrace th = thermo_rate(g0, gf, fine, 64);
      return LoschmidtTrace{th.times, std::vector<double>(th.times.size(), 0.0), th.rate, 1.0};
    };
    // Crossing quench: every critical time on the grid must be a detected cusp.
    const std::vector<double> cusps = detect_cusps(thermo_trace(0.5, 2.0)).cusps();
    const CriticalTimes crit = critical_times(0.5, 2.0, 8);
    int matched = 0;
    double worst = 0.0;
    for (double t : crit.t_star) {
      if (t > fine.t_end) break;
      double nearest = 1e9;
      for (double c : cusps) nearest = std::min(nearest, std::abs(c - t));
      worst = std::max(worst, nearest);
      if (nearest <= 1e-3) ++matched;
    }
    const bool crossing_ok = cusps.size() >= 2 && matched >= 2 && worst <= 1e-3;
    out << "0.5->2.0: " << cusps.size() << " cusps, " << matched << " matched (worst " << sci(worst) << "); ";

    // Within-phase quench: no cusps, finite-size sharpness bounded.
    const std::size_t within = detect_cusps(thermo_trace(0.2, 0.4)).cusps().size();
    const int sizes[] = {8, 10, 12, 14};
    QuenchSpec q{0.2, 0.4, 8, Boundary::periodic, {0.0, 6.0, 6001}};
    const ScalingScan flat = scaling_scan(q, sizes);
    q.g_initial = 0.5;
    q.g_final = 2.0;
    const ScalingScan sharp = scaling_scan(q, sizes);
    out << "0.2->0.4: " << within << " cusps, sharpness spread " << flat.sharpness_spread()
        << "; finite-L sharpness 0.5->2.0 increasing: " << (sharp.sharpness_increasing() ? "yes" : "no");
    return crossing_ok && within == 0 && flat.sharpness_spread() <= 2.0 && sharp.sharpness_increasing();
  });
}

CheckResult check_bose_site_revivals() {
  return timed(5, "Bose-Hubbard site revivals", 1.0, [](std::ostringstream& out) {
    const BoseSiteSpec site = BoseSiteSpec::coherent(2.0, 1.0);
    const double period = 2.0 * kPi / site.interaction;
    double revival_err = 0.0;
    for (int m = 1; m <= 3; ++m) revival_err = std::max(revival_err, std::abs(bose_site_echo(site, m * period) - 1.0));
    const TimeGrid grid{0.0, 4.0 * period, 25001};
    const LoschmidtTrace trace =
        rate_from_echo(sample_echo([&](double t) { return bose_site_echo(site, t); }, grid));
    bool ok = revival_err < 1e-10;
    for (int m = 1; m <= 3; ++m) {
      // Largest rate between the revivals at m T and (m + 1) T.
      double best = -1.0, best_t = 0.0;
      for (std::size_t i = 0; i < trace.size(); ++i) {
        const double t = trace.times[i];
        if (t > m * period && t < (m + 1) * period && trace.rate[i] > best) {
          best = trace.rate[i];
          best_t = t;
        }
      }
      const double target = (2 * m + 1) * kPi / site.interaction;
      const double rel = std::abs(best_t - target) / target;
      ok = ok && rel <= 0.05;
      out << "max near " << (2 * m + 1) << "pi off by " << sci(rel) << "; ";
    }
    out << "revival err " << sci(revival_err);
    return ok;
  });
}

CheckResult check_scar_tower() {
  return timed(6, "scar tower revivals", 30.0, [](std::ostringstream& out) {
    ScarSpec spec;  // N_t = 8, M = 512, W = 8 w
    const double period = 2.0 * kPi / spec.spacing;
    const TimeGrid grid{0.0, 4.0 * period, 4001};

    spec.coupling = 0.0;
    const StateVector tower = tower_state(spec);
    const SpectralDecomposition free_spec = diagonalize(build_scar_hamiltonian(spec));
    double exact_err = 0.0;
    for (int m = 1; m <= 3; ++m) {
      const Complex a = tower.amplitudes.dot(evolve(free_spec, tower, m * period).amplitudes);
      exact_err = std::max(exact_err, std::abs(std::norm(a) - 1.0));
    }

    spec.coupling = 0.05 * spec.spacing;
    const SpectralDecomposition coupled = diagonalize(build_scar_hamiltonian(spec));
    const LoschmidtTrace trace = loschmidt_trace(coupled, tower, grid, 1.0);
    const RevivalPeaks peaks = revival_peaks(trace, period);
    int distinct = 0;
    for (bool d : peaks.distinct) distinct += d ? 1 : 0;
    const double first = peaks.heights.empty() ? 0.0 : peaks.heights.front();
    const double weight = top_weight(scar_overlap_profile(coupled, tower), spec.tower_size);
    auto flag = [](bool pass) { return pass ? "" : " FAIL"; };
    out << "eps=0 revival err " << sci(exact_err) << flag(exact_err < 1e-12) << "; eps=0.05w: " << distinct
        << " distinct peaks" << flag(distinct >= 3) << ", first height " << sci(first) << flag(first > 0.5) << ", top-"
        << spec.tower_size << " weight " << sci(weight) << flag(weight > 0.9);
    return exact_err < 1e-12 && distinct >= 3 && first > 0.5 && weight > 0.9;
  });
}

CheckResult check_property_suites() {
  return timed(7, "property suites", 60.0, [](std::ostringstream& out) {
    bool ok = true;
    auto note = [&](const char* what, double value, double tol) {
      const bool pass = value <= tol;
      ok = ok && pass;
      if (out.tellp() > 0) out << "; ";
      out << what << ' ' << sci(value) << (pass ? "" : " FAIL");
    };

    // Unitarity and echo evenness under the spectral propagator.
    const int sites = 10;
    const Hamiltonian hf = build_tfim({sites, Boundary::periodic, 1.5});
    const SpectralDecomposition spectrum = diagonalize(hf);
    const StateVector psi0 = product_state_z(sites, +1);
    double drift = 0.0, evenness = 0.0;
    for (double t = 0.0; t <= 10.0; t += 0.25) {
      drift = std::max(drift, std::abs(evolve(spectrum, psi0, t).norm() - 1.0));
      const double fwd = std::norm(psi0.amplitudes.dot(evolve(spectrum, psi0, t).amplitudes));
      const double bwd = std::norm(psi0.amplitudes.dot(evolve(spectrum, psi0, -t).amplitudes));
      evenness = std::max(evenness, std::abs(fwd - bwd));
    }
    note("norm drift", drift, 1e-12);
    note("echo(t)-echo(-t)", evenness, 1e-12);

    // Hermiticity of the term list (exact) and of its dense form.
    const RealMatrix dense = hf.dense();
    note("term-list defect", hf.hermiticity_defect(), 0.0);
    note("dense defect", (dense - dense.transpose()).cwiseAbs().maxCoeff(), 1e-12);

    // Krylov against the spectral propagator.
    double krylov = 0.0;
    for (double t : {0.5, 2.0, 5.0}) {
      const StateVector a = krylov_evolve(hf, psi0, t);
      const StateVector b = evolve(spectrum, psi0, t);
      krylov = std::max(krylov, (a.amplitudes - b.amplitudes).cwiseAbs().maxCoeff());
    }
    note("Krylov vs spectral", krylov, 1e-9);

    // Ladder -> two-level -> per-site factor reductions.
    double reduction = 0.0;
    const double g = 1.3;
    for (double t = 0.0; t <= 20.0; t += 0.05) {
      LadderSpec two{{Complex{0.0, 0.0}, Complex{std::sqrt(0.3), 0.0}, Complex{0.0, 0.0}, Complex{0.0, std::sqrt(0.7)}}, g};
      reduction = std::max(reduction, std::abs(ladder_echo(two, t) - two_level_echo({2.0 * g, 0.3}, t)));
      const double c = std::cos(0.5 * g * t);
      reduction = std::max(reduction, std::abs(two_level_echo({g, 0.5}, t) - c * c));
    }
    note("reduction identities", reduction, 1e-12);

    // Bose site truncation stability.
    const BoseSiteSpec site = BoseSiteSpec::coherent(2.0, 1.0);
    const BoseSiteSpec doubled = BoseSiteSpec::coherent_truncated(2.0, 1.0, 2 * site.truncation);
    double trunc = 0.0;
    for (double t = 0.0; t <= 4.0 * kPi; t += 0.01) trunc = std::max(trunc, std::abs(bose_site_echo(site, t) - bose_site_echo(doubled, t)));
    note("truncation stability", trunc, 1e-12);
    return ok;
  });
}

std::vector<NamedCheck> suite_checks() {
  return {
      {1, "product-formula cusps", check_product_formula_cusps},
      {2, "ED vs free-fermion echoes", check_oracle_equivalence},
      {3, "deep-quench cos^{2L} limit", check_deep_quench_limit},
      {4, "thermodynamic cusps iff crossing g=1", check_thermodynamic_cusps},
      {5, "Bose-Hubbard site revivals", check_bose_site_revivals},
      {6, "scar tower revivals", check_scar_tower},
      {7, "property suites", check_property_suites},
  };
}

std::vector<CheckResult> run_suite() {
  std::vector<CheckResult> results;
  for (const auto& c : suite_checks()) results.push_back(c.run());
  return results;
}

std::string format_check(const CheckResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "[%s] %d %-38s (%6.2f s) ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
  return head + r.detail;
}

}  // namespace loschmidt
