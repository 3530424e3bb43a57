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
#include "cli_runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "loschmidt/ed_engine.hpp"
#include "loschmidt/error.hpp"
#include "loschmidt/free_fermion.hpp"
#include "loschmidt/suite.hpp"
#include "loschmidt/rate_analysis.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace loschmidt::cli {
namespace {

namespace fs = std::filesystem;
constexpr double kPi = std::numbers::pi;

const std::vector<std::string> kSubcommands = {"tfim-ed", "tfim-ff", "thermo", "rabi",
                                               "ladder",  "bose-site", "scars", "paper-suite"};

std::string boundary_name(Boundary b) { return b == Boundary::periodic ? "periodic" : "open"; }
std::string initial_name(InitialState s) { return s == InitialState::even_ground ? "even-ground" : "polarized"; }

void add_grid_options(CLI::App* app, ExperimentConfig& c) {
  app->add_option("--t-start", c.grid.t_start, "First sample time");
  app->add_option("--t-max", c.grid.t_end, "Last sample time");
  app->add_option("--points", c.grid.n_points, "Number of grid points");
  app->add_option("--threshold", c.curvature_threshold, "Cusp curvature threshold (ratio to median curvature)");
}

void add_quench_options(CLI::App* app, ExperimentConfig& c) {
  app->add_option("--L", c.sites, "Number of sites");
  app->add_option("--g0", c.g0, "Initial transverse field");
  app->add_option("--gf", c.gf, "Final transverse field");
  app->add_option("--jf", c.jf, "Final Ising coupling (0: field only)");
  app->add_option("--initial", c.initial, "Initial state")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, InitialState>{{"even-ground", InitialState::even_ground},
                                              {"polarized", InitialState::polarized_z}},
          CLI::ignore_case));
}

void validate(const ExperimentConfig& c) {
  auto require = [](bool ok, const std::string& message) {
    if (!ok) throw UsageError(message);
  };
  try {
    c.grid.validate();
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  require(c.curvature_threshold > 0.0, "--threshold must be positive");
  require(c.threads >= 0, "--threads must be non-negative");
  const std::string& s = c.subcommand;
  if (s == "tfim-ed" || s == "tfim-ff") {
    require(c.sites >= 2, "--L must be at least 2");
    require(std::isfinite(c.g0) && std::isfinite(c.gf) && std::isfinite(c.jf), "fields must be finite");
  }
  if (s == "tfim-ed") {
    if (c.krylov) {
      require(c.sites <= 24, "--L must be at most 24 for Krylov propagation");
      require(c.initial == InitialState::polarized_z, "--krylov supports only --initial polarized");
      require(c.krylov_dim >= 2, "--krylov-dim must be at least 2");
      require(c.krylov_step > 0.0, "--krylov-step must be positive");
    } else {
      require(c.sites <= kDenseSiteCap, "dense cap exceeded: L = " + std::to_string(c.sites) +
                                            " is above the exact-diagonalization limit of " +
                                            std::to_string(kDenseSiteCap) +
                                            " sites; pass --krylov (with --initial polarized) for Lanczos propagation");
    }
  }
  if (s == "tfim-ff") {
    require(c.sites % 2 == 0, "--L must be even for the free-fermion route");
    require(c.g0 >= 0.0 && c.gf >= 0.0, "fields must be non-negative for the free-fermion route");
    require(c.boundary == Boundary::periodic, "the free-fermion route needs --boundary periodic");
  }
  if (s == "thermo") {
    require(c.g0 >= 0.0 && c.gf >= 0.0 && std::isfinite(c.g0) && std::isfinite(c.gf), "fields must be finite and non-negative");
    require(c.nodes >= 64, "--nodes must be at least 64");
    require(c.tolerance > 0.0, "--tolerance must be positive");
    require(c.n_critical >= 0, "--n-critical must be non-negative");
  }
  if (s == "rabi") {
    require(c.splitting > 0.0, "--g must be positive");
    require(c.weight >= 0.0 && c.weight <= 1.0, "--weight must lie in [0, 1]");
    require(c.rabi_sites >= 1, "--L must be at least 1");
  }
  if (s == "ladder") {
    require(c.levels >= 1, "--levels must be at least 1");
    require(c.spacing > 0.0, "--spacing must be positive");
  }
  if (s == "bose-site") {
    require(c.nbar > 0.0, "--nbar must be positive");
    require(c.interaction > 0.0, "--U must be positive");
  }
  if (s == "scars") {
    try {
      c.scar.validate();
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y%m%d-%H%M%S", &tm);
  return buf;
}

fs::path make_run_directory(const ExperimentConfig& c) {
  const fs::path base = fs::path(c.output_dir) / (c.run_name.empty() ? c.subcommand + "-" + timestamp() : c.run_name);
  fs::path dir = base;
  std::error_code ec;
  for (int n = 1; fs::exists(dir, ec); ++n) dir = base.string() + "-" + std::to_string(n);
  fs::create_directories(dir, ec);
  if (ec) throw Error("cli_runner", "cannot create run directory " + dir.string() + ": " + ec.message());
  return dir;
}

class RunWriter {
 public:
  RunWriter(fs::path dir, RunManifest& manifest) : dir_(std::move(dir)), manifest_(manifest) {}

  template <typename Fn>
  void file(const std::string& name, Fn&& write) {
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw Error("cli_runner", "cannot open " + (dir_ / name).string());
    write(out);
    if (!out) throw Error("cli_runner", "failed writing " + (dir_ / name).string());
    manifest_.files.push_back(name);
  }

  void trace(const LoschmidtTrace& t, OutputFormat format) {
    if (format == OutputFormat::csv) {
      file("trace.csv", [&](std::ostream& o) { write_trace_csv(o, t); });
    } else {
      file("trace.json", [&](std::ostream& o) { write_trace_json(o, t); });
    }
  }

  void json(const std::string& name, const nlohmann::json& j) {
    file(name, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
  }

 private:
  fs::path dir_;
  RunManifest& manifest_;
};

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

void check(RunManifest& m, std::string name, bool passed, std::string detail) {
  m.checks.push_back({std::move(name), passed, std::move(detail)});
}

QuenchSpec quench_of(const ExperimentConfig& c) {
  return {c.g0, c.gf, c.sites, c.boundary, c.grid, c.jf, c.initial};
}

void run_tfim_ed(const ExperimentConfig& c, RunWriter& w, RunManifest& m) {
  const Hamiltonian hf = build_tfim({c.sites, c.boundary, c.gf, c.jf});
  LoschmidtTrace trace;
  if (c.krylov) {
    KrylovOptions opt;
    opt.subspace_dim = c.krylov_dim;
    opt.step = c.krylov_step;
    trace = krylov_trace(hf, product_state_z(c.sites, +1), c.grid, c.sites, opt);
  } else {
    trace = ed_quench_trace(quench_of(c));
  }
  w.trace(trace, c.format);
  w.json("cusps.json", detect_cusps(trace, c.curvature_threshold).to_json());
  w.json("hamiltonian_terms.json", hf.terms().to_json());
  if (c.grid.t_start == 0.0) check(m, "echo(0) = 1", std::abs(trace.echo.front() - 1.0) < 1e-12, sci(std::abs(trace.echo.front() - 1.0)));
  if (c.boundary == Boundary::periodic && c.sites % 2 == 0 && c.g0 >= 0.0 && c.gf >= 0.0) {
    const double d = max_abs_diff(trace.echo, free_fermion_quench_trace(quench_of(c)).echo);
    check(m, "ED vs free fermions", d < (c.krylov ? 1e-7 : 1e-8), sci(d));
  }
}

void run_tfim_ff(const ExperimentConfig& c, RunWriter& w, RunManifest& m) {
  const LoschmidtTrace trace = free_fermion_quench_trace(quench_of(c));
  w.trace(trace, c.format);
  w.json("cusps.json", detect_cusps(trace, c.curvature_threshold).to_json());
  w.json("critical_times.json", critical_times(c.g0, c.gf, c.n_critical).to_json());
  if (c.sites <= 10) {
    const double d = max_abs_diff(trace.echo, ed_quench_trace(quench_of(c)).echo);
    check(m, "free fermions vs ED", d < 1e-8, sci(d));
  }
}

void run_thermo(const ExperimentConfig& c, RunWriter& w, RunManifest& m) {
  const ThermoRateTrace th = thermo_rate(c.g0, c.gf, c.grid, c.nodes, c.tolerance);
  LoschmidtTrace trace{th.times, {}, th.rate, 1.0};
  for (double r : th.rate) trace.echo.push_back(std::exp(-r));
  w.trace(trace, c.format);
  const CuspReport report = detect_cusps(trace, c.curvature_threshold);
  const CriticalTimes crit = critical_times(c.g0, c.gf, c.n_critical);
  w.json("cusps.json", report.to_json());
  w.json("critical_times.json", crit.to_json());
  m.extra["max_quadrature_error"] = th.max_error;
  m.extra["quadrature_nodes"] = th.quadrature_nodes;
  check(m, "quadrature error within 10x tolerance", th.max_error <= 10.0 * c.tolerance, sci(th.max_error));
  const std::vector<double> cusps = report.cusps();
  double worst = 0.0;
  int inside = 0;
  for (double t : crit.t_star) {
    if (t < c.grid.t_start || t > c.grid.t_end) continue;
    ++inside;
    double nearest = 1e300;
    for (double x : cusps) nearest = std::min(nearest, std::abs(x - t));
    worst = std::max(worst, nearest);
  }
  const double tol = std::max(1e-3, c.grid.spacing());
  check(m, "cusps at critical times", inside == 0 ? cusps.empty() : worst <= tol,
        std::to_string(inside) + " critical times on grid, worst miss " + sci(worst));
}

void run_rabi(const ExperimentConfig& c, RunWriter& w, RunManifest& m) {
  const TwoLevelSpec spec{c.splitting, c.weight};
  const LoschmidtTrace trace = sample_echo([&](double t) { return std::pow(two_level_echo(spec, t), c.rabi_sites); },
                                           c.grid, c.rabi_sites);
  w.trace(trace, c.format);
  w.json("cusps.json", detect_cusps(trace, c.curvature_threshold).to_json());
  double err = 0.0;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const double t = trace.times[i];
    const Complex a = c.weight * std::polar(1.0, 0.5 * c.splitting * t) + (1.0 - c.weight) * std::polar(1.0, -0.5 * c.splitting * t);
    err = std::max(err, std::abs(trace.echo[i] - std::pow(std::norm(a), c.rabi_sites)));
  }
  check(m, "two-level closed form vs amplitude sum", err < 1e-12, sci(err));
}

void run_ladder(const ExperimentConfig& c, RunWriter& w, RunManifest& m) {
  const LadderSpec spec = LadderSpec::uniform(c.levels, c.spacing);
  const LoschmidtTrace trace = sample_echo([&](double t) { return ladder_echo(spec, t); }, c.grid);
  w.trace(trace, c.format);
  w.json("cusps.json", detect_cusps(trace, c.curvature_threshold).to_json());
  const double period = 2.0 * kPi / c.spacing;
  double err = 0.0;
  for (double t : trace.times) err = std::max(err, std::abs(ladder_echo(spec, t + period) - ladder_echo(spec, t)));
  check(m, "periodicity 2 pi / spacing", err < 1e-12, sci(err));
}

void run_bose_site(const ExperimentConfig& c, RunWriter& w, RunManifest& m) {
  const BoseSiteSpec spec = BoseSiteSpec::coherent(c.nbar, c.interaction);
  const LoschmidtTrace trace = sample_echo([&](double t) { return bose_site_echo(spec, t); }, c.grid);
  w.trace(trace, c.format);
  w.json("cusps.json", detect_cusps(trace, c.curvature_threshold).to_json());
  m.extra["truncation"] = spec.truncation;
  m.extra["tail_mass"] = spec.tail_mass;
  const double err = std::abs(bose_site_echo(spec, 2.0 * kPi / c.interaction) - 1.0);
  check(m, "revival at 2 pi / U", err < 1e-10, sci(err));
}

void run_scars(const ExperimentConfig& c, RunWriter& w, RunManifest& m) {
  ScarSpec spec = c.scar;
  spec.seed = c.seed;
  const SpectralDecomposition spectrum = diagonalize(build_scar_hamiltonian(spec));
  const StateVector psi0 = tower_state(spec);
  const LoschmidtTrace trace = loschmidt_trace(spectrum, psi0, c.grid, 1.0);
  const std::vector<OverlapEntry> profile = scar_overlap_profile(spectrum, psi0);
  w.trace(trace, c.format);
  w.file("overlaps.csv", [&](std::ostream& o) { write_overlap_csv(o, profile); });
  const RevivalPeaks peaks = revival_peaks(trace, 2.0 * kPi / spec.spacing);
  m.extra["revival_heights"] = peaks.heights;
  m.extra["top_tower_weight"] = top_weight(profile, spec.tower_size);
  double total = 0.0;
  for (const auto& e : profile) total += e.weight;
  check(m, "spectral weights sum to 1", std::abs(total - 1.0) < 1e-12, sci(std::abs(total - 1.0)));
}

void run_suite_command(RunWriter& w, RunManifest& m, std::ostream& log) {
  auto table = nlohmann::json::array();
  for (const auto& entry : suite_checks()) {
    const CheckResult r = entry.run();
    log << format_check(r) << std::endl;
    check(m, std::to_string(r.id) + " " + r.name, r.passed, r.detail);
    table.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}});
  }
  w.json("suite.json", table);
}

void configure_threads(int requested) {
  int n = requested;
  if (n == 0) {
    if (const char* env = std::getenv("LOSCHMIDT_THREADS")) n = std::atoi(env);
  }
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j;
  j["subcommand"] = subcommand;
  j["grid"] = {{"t_start", grid.t_start}, {"t_end", grid.t_end}, {"n_points", grid.n_points}};
  j["seed"] = seed;
  j["format"] = format == OutputFormat::csv ? "csv" : "json";
  j["curvature_threshold"] = curvature_threshold;
  const std::string& s = subcommand;
  if (s == "tfim-ed" || s == "tfim-ff") {
    j["L"] = sites;
    j["g0"] = g0;
    j["gf"] = gf;
    j["jf"] = jf;
    j["boundary"] = boundary_name(boundary);
    j["initial"] = initial_name(initial);
    if (s == "tfim-ed") {
      j["krylov"] = krylov;
      if (krylov) j["krylov_dim"] = krylov_dim, j["krylov_step"] = krylov_step;
    } else {
      j["n_critical"] = n_critical;
    }
  } else if (s == "thermo") {
    j["g0"] = g0;
    j["gf"] = gf;
    j["nodes"] = nodes;
    j["tolerance"] = tolerance;
    j["n_critical"] = n_critical;
  } else if (s == "rabi") {
    j["g"] = splitting;
    j["weight"] = weight;
    j["L"] = rabi_sites;
  } else if (s == "ladder") {
    j["levels"] = levels;
    j["spacing"] = spacing;
  } else if (s == "bose-site") {
    j["nbar"] = nbar;
    j["U"] = interaction;
  } else if (s == "scars") {
    j["tower"] = scar.tower_size;
    j["background"] = scar.background_size;
    j["spacing"] = scar.spacing;
    j["bandwidth"] = scar.background_bandwidth;
    j["coupling"] = scar.coupling;
  }
  return j;
}

ExperimentConfig parse_config(const std::vector<std::string>& args) {
  ExperimentConfig c;
  CLI::App app{"Loschmidt echoes and rate functions for quantum quenches", "loschmidt"};
  app.set_config("--config", "", "TOML/INI file with option values; explicit flags take precedence");
  app.require_subcommand(1);
  app.add_option("--output-dir", c.output_dir, "Directory receiving run folders");
  app.add_option("--run-name", c.run_name, "Run folder name (default <subcommand>-<UTC timestamp>)");
  app.add_option("--seed", c.seed, "Random seed");
  app.add_option("--format", c.format, "Trace file format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"csv", OutputFormat::csv}, {"json", OutputFormat::json}}, CLI::ignore_case));
  app.add_option("--threads", c.threads, "Worker threads (default: LOSCHMIDT_THREADS or all cores)");

  auto* ed = app.add_subcommand("tfim-ed", "Exact-diagonalization quench of the transverse-field Ising chain");
  add_quench_options(ed, c);
  add_grid_options(ed, c);
  ed->add_option("--boundary", c.boundary, "Boundary condition")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Boundary>{{"periodic", Boundary::periodic}, {"open", Boundary::open}}, CLI::ignore_case));
  ed->add_flag("--krylov", c.krylov, "Lanczos propagation instead of full diagonalization");
  ed->add_option("--krylov-dim", c.krylov_dim, "Krylov subspace dimension");
  ed->add_option("--krylov-step", c.krylov_step, "Largest Krylov time step");

  auto* ff = app.add_subcommand("tfim-ff", "Free-fermion finite-L quench of the transverse-field Ising chain");
  add_quench_options(ff, c);
  add_grid_options(ff, c);
  ff->add_option("--n-critical", c.n_critical, "Number of critical times to export");

  auto* th = app.add_subcommand("thermo", "Thermodynamic-limit rate function by quadrature");
  th->add_option("--g0", c.g0, "Initial transverse field");
  th->add_option("--gf", c.gf, "Final transverse field");
  th->add_option("--nodes", c.nodes, "Initial quadrature nodes (>= 64)");
  th->add_option("--tolerance", c.tolerance, "Absolute quadrature tolerance on r(t)");
  th->add_option("--n-critical", c.n_critical, "Number of critical times to export");
  add_grid_options(th, c);

  auto* rabi = app.add_subcommand("rabi", "Two-level (Rabi) echo");
  rabi->add_option("--g", c.splitting, "Level splitting");
  rabi->add_option("--weight", c.weight, "Upper-level population");
  rabi->add_option("--L", c.rabi_sites, "Number of independent copies");
  add_grid_options(rabi, c);

  auto* ladder = app.add_subcommand("ladder", "Equally spaced ladder with uniform populations");
  ladder->add_option("--levels", c.levels, "Number of levels");
  ladder->add_option("--spacing", c.spacing, "Level spacing");
  add_grid_options(ladder, c);

  auto* bose = app.add_subcommand("bose-site", "Single Bose-Hubbard site collapse and revival");
  bose->add_option("--nbar", c.nbar, "Mean occupation of the coherent state");
  bose->add_option("--U", c.interaction, "On-site interaction");
  add_grid_options(bose, c);

  auto* scars = app.add_subcommand("scars", "Equally spaced tower coupled to a GOE background");
  scars->add_option("--tower", c.scar.tower_size, "Tower levels");
  scars->add_option("--background", c.scar.background_size, "Background levels");
  scars->add_option("--spacing", c.scar.spacing, "Tower spacing");
  scars->add_option("--bandwidth", c.scar.background_bandwidth, "Background bandwidth");
  scars->add_option("--coupling", c.scar.coupling, "Tower-background coupling (standard deviation)");
  add_grid_options(scars, c);

  app.add_subcommand("paper-suite", "Run every end-to-end check and print a pass/fail table");
  // Common flags may follow the subcommand name.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream text;
    app.exit(e, text, text);
    throw HelpRequested(text.str());
  } catch (const CLI::CallForAllHelp& e) {
    std::ostringstream text;
    app.exit(e, text, text);
    throw HelpRequested(text.str());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  for (const auto& name : kSubcommands) {
    if (app.got_subcommand(name)) c.subcommand = name;
  }
  c.scar.seed = c.seed;
  validate(c);
  return c;
}

bool RunManifest::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const OracleCheck& c) { return c.passed; });
}

nlohmann::json RunManifest::to_json() const {
  nlohmann::json j;
  j["config"] = config;
  j["version"] = version;
  j["wall_time_s"] = wall_seconds;
  j["files"] = files;
  auto checks_json = nlohmann::json::array();
  for (const auto& c : checks) checks_json.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["oracle_checks"] = checks_json;
  j["all_passed"] = all_passed();
  if (!extra.is_null()) j["diagnostics"] = extra;
  return j;
}

RunManifest run(const ExperimentConfig& config, std::ostream& log) {
  const auto start = std::chrono::steady_clock::now();
  configure_threads(config.threads);
  RunManifest m;
  m.config = config.to_json();
  m.version = LOSCHMIDT_VERSION;
  m.directory = make_run_directory(config);
  RunWriter w(m.directory, m);

  const std::string& s = config.subcommand;
  if (s == "tfim-ed") {
    run_tfim_ed(config, w, m);
  } else if (s == "tfim-ff") {
    run_tfim_ff(config, w, m);
  } else if (s == "thermo") {
    run_thermo(config, w, m);
  } else if (s == "rabi") {
    run_rabi(config, w, m);
  } else if (s == "ladder") {
    run_ladder(config, w, m);
  } else if (s == "bose-site") {
    run_bose_site(config, w, m);
  } else if (s == "scars") {
    run_scars(config, w, m);
  } else if (s == "paper-suite") {
    run_suite_command(w, m, log);
  } else {
    throw UsageError("unknown subcommand '" + s + "'");
  }

  m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  // Manifest last, via rename, so a present manifest always describes a complete run.
  const fs::path tmp = m.directory / "manifest.json.tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << m.to_json().dump(2) << '\n';
    if (!out) throw Error("cli_runner", "failed writing manifest");
  }
  fs::rename(tmp, m.directory / "manifest.json");
  // paper-suite already printed its table line by line.
  if (s != "paper-suite")
    for (const auto& c : m.checks) log << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
  log << "wrote " << m.directory.string() << '\n';
  return m;
}

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  ExperimentConfig config;
  try {
    config = parse_config(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }
  try {
    const RunManifest m = run(config, out);
    return m.all_passed() ? 0 : 1;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error in " << e.module() << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace loschmidt::cli
