// Copyright 2026 The minact Authors.
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

// Command-line front end: ramp synthesis, single evolutions, sweeps and the
// figure data sets. Exit codes: 0 success, 2 usage or parameter error,
// 3 partial numerical failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minact/action.hpp"
#include "minact/dynamics.hpp"
#include "minact/errors.hpp"
#include "minact/experiments.hpp"
#include "minact/io.hpp"
#include "minact/version.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kUsageError = 2;
constexpr int kPartialFailure = 3;

struct ModelArgs {
  std::string model = "lz";
  std::optional<double> g0;
  std::optional<double> g_tau;
  double delta = 1.0;
  int sites = 20;
  double eta = 100.0;
  double omega = 1.0;
  int n_max = 160;
};

void add_model_options(CLI::App& cmd, ModelArgs& args) {
  cmd.add_option("--model", args.model, "lz, ising or fc")
      ->check(CLI::IsMember({"lz", "ising", "fc"}))
      ->capture_default_str();
  cmd.add_option("--g0", args.g0, "initial coupling");
  cmd.add_option("--gtau", args.g_tau, "final coupling");
  cmd.add_option("--delta", args.delta, "LZ gap scale")->capture_default_str();
  cmd.add_option("--N", args.sites, "Ising site count (even)")->capture_default_str();
  cmd.add_option("--eta", args.eta, "fc size parameter")->capture_default_str();
  cmd.add_option("--omega", args.omega, "energy scale")->capture_default_str();
  cmd.add_option("--nmax", args.n_max, "fc Fock truncation (even)")->capture_default_str();
}

minact::ModelSystem build_model(const ModelArgs& args) {
  if (args.model == "lz") {
    if (!(args.delta > 0.0)) throw std::invalid_argument("--delta must be positive");
    return minact::LandauZener{args.delta};
  }
  if (args.model == "ising") return minact::IsingChain(args.sites, args.omega);
  return minact::FullyConnectedModel(args.eta, args.n_max, args.omega);
}

struct Endpoints {
  double g0;
  double g_tau;
};

Endpoints endpoints(const ModelArgs& args, const minact::ModelSystem& model) {
  const double g0 = args.g0.value_or(minact::default_start(model));
  return {g0, args.g_tau.value_or(minact::default_target(model, g0))};
}

minact::RampProfile ramp_for(const std::string& protocol, const minact::ModelSystem& model,
                             Endpoints ends) {
  return minact::synthesize(minact::parse_protocol(protocol), model, ends.g0, ends.g_tau);
}

void write_profile(const minact::RampProfile& ramp, std::size_t points, const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  minact::write_profile_csv(ramp, points, out);
}

// Keeps every output under the user-chosen directory.
fs::path under(const fs::path& dir, const fs::path& name) {
  if (name.is_absolute()) {
    throw std::invalid_argument("output path must be relative to --out: " + name.string());
  }
  for (const auto& part : name) {
    if (part == "..") throw std::invalid_argument("output path may not leave --out");
  }
  return dir / name;
}

int run_ramp(const ModelArgs& args, const std::string& protocol, std::size_t points,
             std::optional<double> tau, const fs::path& out_dir) {
  const minact::ModelSystem model = build_model(args);
  const Endpoints ends = endpoints(args, model);
  const minact::RampProfile ramp = ramp_for(protocol, model, ends);
  const fs::path path = out_dir / ("ramp_" + args.model + "_" + protocol + ".csv");
  write_profile(ramp, points, path);
  std::cout << "wrote " << path.string() << '\n';
  if (tau) {
    const double action = minact::evaluate_action(minact::action_model_for(model), ramp, *tau);
    std::cout << "action " << minact::format_number(action) << '\n';
  }
  return 0;
}

int run_evolve(const ModelArgs& args, const std::string& protocol, double tau,
               std::size_t steps) {
  const minact::ModelSystem model = build_model(args);
  const Endpoints ends = endpoints(args, model);
  const minact::RampProfile ramp = ramp_for(protocol, model, ends);
  minact::EvolveOptions options;
  options.steps = steps;
  const minact::EvolutionResult r = minact::evolve(model, ramp, tau, options);
  const double action = minact::evaluate_action(minact::action_model_for(model), ramp, tau);
  std::cout << "fidelity " << minact::format_number(r.fidelity) << '\n'
            << "norm_drift " << minact::format_number(r.norm_drift) << '\n'
            << "steps " << r.steps << '\n'
            << "converged " << (r.converged ? "true" : "false") << '\n'
            << "action " << minact::format_number(action) << '\n';
  return r.converged ? 0 : kPartialFailure;
}

int finish_sweep(const minact::SweepSpec& spec, const fs::path& path) {
  const minact::SweepResult result = minact::run_sweep(spec);
  minact::write_sweep(result, path);
  std::cout << "wrote " << path.string() << (result.partial ? " (partial)" : "") << '\n';
  return result.partial ? kPartialFailure : 0;
}

struct SweepArgs {
  std::string config;
  std::vector<std::string> protocols;
  std::optional<double> tau_min;
  std::optional<double> tau_max;
  std::optional<std::size_t> points;
  bool linear_spacing = false;
};

int run_sweep_command(const ModelArgs& args, const SweepArgs& sweep, unsigned threads,
                      bool threads_set, const fs::path& out_dir) {
  minact::SweepSpec spec;
  if (!sweep.config.empty()) {
    spec = minact::load_sweep_spec(sweep.config);
  } else {
    spec = minact::default_sweep_spec(build_model(args));
    const Endpoints ends = endpoints(args, spec.model);
    spec.g0 = ends.g0;
    spec.g_tau = ends.g_tau;
    spec.grid = minact::default_grid(
        minact::timescales(spec.model, std::max(spec.g0, spec.g_tau)), spec.model);
  }
  if (!sweep.protocols.empty()) {
    spec.protocols.clear();
    for (const auto& p : sweep.protocols) spec.protocols.push_back(minact::parse_protocol(p));
  }
  if (sweep.tau_min) spec.grid.min = *sweep.tau_min;
  if (sweep.tau_max) spec.grid.max = *sweep.tau_max;
  if (sweep.points) spec.grid.points = *sweep.points;
  if (sweep.linear_spacing) spec.grid.log_spaced = false;
  if (threads_set || sweep.config.empty()) spec.threads = threads;
  spec.validate();
  const fs::path name = spec.output.empty()
                            ? fs::path("sweep_" + std::string(minact::model_name(spec.model)) + ".csv")
                            : spec.output;
  return finish_sweep(spec, under(out_dir, name));
}

int run_figures(const fs::path& out_dir, std::size_t points, unsigned threads) {
  struct Panel {
    minact::ModelSystem model;
    std::string file;
  };
  const std::vector<Panel> panels = {
      {minact::LandauZener{1.0}, "lz.csv"},
      {minact::IsingChain(20), "ising_N20.csv"},
      {minact::IsingChain(30), "ising_N30.csv"},
      {minact::IsingChain(60), "ising_N60.csv"},
      {minact::FullyConnectedModel(10.0), "fc_eta10.csv"},
      {minact::FullyConnectedModel(100.0), "fc_eta100.csv"},
  };
  bool partial = false;
  for (const Panel& panel : panels) {
    minact::SweepSpec spec = minact::default_sweep_spec(panel.model);
    spec.grid.points = points;
    spec.threads = threads;
    const minact::SweepResult result = minact::run_sweep(spec);
    minact::write_sweep(result, out_dir / panel.file);
    partial = partial || result.partial;
    std::cout << "wrote " << (out_dir / panel.file).string()
              << (result.partial ? " (partial)" : "") << '\n';
  }

  // Ramp profiles for the figure insets.
  constexpr std::size_t kProfilePoints = 201;
  const minact::ModelSystem lz = minact::LandauZener{1.0};
  const minact::ModelSystem fc = minact::FullyConnectedModel(100.0);
  for (const char* p : {"linear", "action"}) {
    write_profile(ramp_for(p, lz, {-10.0, 10.0}), kProfilePoints,
                  out_dir / (std::string("profile_lz_") + p + ".csv"));
  }
  for (const char* p : {"linear", "action", "garbe"}) {
    write_profile(ramp_for(p, fc, {0.1, 0.9}), kProfilePoints,
                  out_dir / (std::string("profile_fc_") + p + ".csv"));
  }
  return partial ? kPartialFailure : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal adiabatic action ramps and their fidelities"};
  app.set_version_flag("--version", std::string(minact::kVersion));
  app.require_subcommand(1);

  std::string out_dir = ".";
  unsigned threads = 1;

  ModelArgs ramp_args;
  std::string ramp_protocol = "action";
  std::size_t ramp_points = 1001;
  std::optional<double> ramp_tau;
  CLI::App* ramp = app.add_subcommand("ramp", "write a ramp profile G(s) as CSV");
  add_model_options(*ramp, ramp_args);
  ramp->add_option("--protocol", ramp_protocol, "linear, action or garbe")->capture_default_str();
  ramp->add_option("--points", ramp_points, "samples in s")
      ->check(CLI::Range(std::size_t{2}, std::size_t{10000000}))
      ->capture_default_str();
  ramp->add_option("--tau", ramp_tau, "also print the action for this duration")
      ->check(CLI::PositiveNumber);
  ramp->add_option("--out", out_dir, "output directory")->capture_default_str();

  ModelArgs evolve_args;
  std::string evolve_protocol = "action";
  double evolve_tau = 0.0;
  std::size_t evolve_steps = 0;
  CLI::App* evolve = app.add_subcommand("evolve", "evolve one ramp and print its fidelity");
  add_model_options(*evolve, evolve_args);
  evolve->add_option("--protocol", evolve_protocol, "linear, action or garbe")
      ->capture_default_str();
  evolve->add_option("--tau", evolve_tau, "ramp duration")->required()->check(CLI::PositiveNumber);
  evolve->add_option("--steps", evolve_steps, "initial step count (default: automatic)");

  ModelArgs sweep_args;
  SweepArgs sweep_opts;
  CLI::App* sweep = app.add_subcommand("sweep", "fidelity versus duration over a tau grid");
  add_model_options(*sweep, sweep_args);
  sweep->add_option("--config", sweep_opts.config, "JSON sweep specification")
      ->check(CLI::ExistingFile);
  sweep->add_option("--protocol", sweep_opts.protocols, "protocols (repeatable)");
  sweep->add_option("--tau-min", sweep_opts.tau_min, "smallest duration");
  sweep->add_option("--tau-max", sweep_opts.tau_max, "largest duration");
  sweep->add_option("--points", sweep_opts.points, "grid size");
  sweep->add_flag("--linear", sweep_opts.linear_spacing, "linear instead of log spacing");
  CLI::Option* sweep_threads = sweep->add_option("--threads", threads, "worker threads");
  sweep->add_option("--out", out_dir, "output directory")->capture_default_str();

  std::size_t figure_points = 60;
  CLI::App* figures = app.add_subcommand("figures", "write every figure data set");
  figures->add_option("--out", out_dir, "output directory")->capture_default_str();
  figures->add_option("--threads", threads, "worker threads")->capture_default_str();
  figures->add_option("--points", figure_points, "tau grid size per panel")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*ramp) return run_ramp(ramp_args, ramp_protocol, ramp_points, ramp_tau, out_dir);
    if (*evolve) return run_evolve(evolve_args, evolve_protocol, evolve_tau, evolve_steps);
    if (*sweep) {
      return run_sweep_command(sweep_args, sweep_opts, threads, sweep_threads->count() > 0,
                               out_dir);
    }
    return run_figures(out_dir, figure_points, threads);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const minact::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kPartialFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
