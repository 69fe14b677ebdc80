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

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minact/action.hpp"
#include "minact/models.hpp"
#include "minact/ramp.hpp"

namespace minact {

enum class Protocol { kLinear, kAction, kGarbe };

std::string_view to_string(Protocol protocol);
/// Throws std::invalid_argument for unknown names.
Protocol parse_protocol(std::string_view name);

struct TauGrid {
  double min = 0.1;
  double max = 100.0;
  std::size_t points = 60;
  bool log_spaced = true;

  /// Sorted, strictly positive grid values.
  std::vector<double> values() const;
};

struct SweepSpec {
  ModelSystem model = LandauZener{};
  double g0 = -10.0;
  double g_tau = 10.0;
  std::vector<Protocol> protocols;
  TauGrid grid;
  std::filesystem::path output;
  /// Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 1;

  /// Throws std::invalid_argument on an inconsistent spec.
  void validate() const;
};

struct SweepRow {
  double tau = 0.0;
  Protocol protocol = Protocol::kLinear;
  double fidelity = 0.0;
  double norm_drift = 0.0;
  std::size_t steps = 0;
  double action = 0.0;
  bool converged = false;
};

struct SweepResult {
  SweepSpec spec;
  Timescales timescales;
  /// Ordered by tau index, then by protocol order in the spec.
  std::vector<SweepRow> rows;
  bool partial = false;
};

/// Target the model's minimal-action ramp runs to from g0: -g0 for the
/// Landau-Zener model, 2 - g0 for the Ising chain, 0.9 for the fully
/// connected model.
double default_target(const ModelSystem& model, double g0);

/// Default start value: -10 delta, 0, and 0.1 respectively.
double default_start(const ModelSystem& model);

/// Log-spaced 60 points on [0.1 tau_a, 100 tau_a], or [0.1 tau_a, 10 tau_l]
/// for the Ising chain.
TauGrid default_grid(const Timescales& timescales, const ModelSystem& model);

/// Spec with every default filled in for the given model.
SweepSpec default_sweep_spec(const ModelSystem& model);

/// Ramp for one protocol. The minimal-action ramp uses the model's closed
/// form; garbe is only defined for the fully connected model.
RampProfile synthesize(Protocol protocol, const ModelSystem& model, double g0,
                       double g_tau);

/// Action model the minimal-action ramp of `model` is derived from.
ActionModel action_model_for(const ModelSystem& model);

/// Evolve every (tau, protocol) pair. Rows that did not converge are kept
/// and flagged, and the result is marked partial.
SweepResult run_sweep(const SweepSpec& spec);

/// Smallest grid tau with fidelity >= f_min, or nullopt if the threshold is
/// not attained on the grid.
std::optional<double> threshold_time(const SweepResult& result, Protocol protocol,
                                     double f_min);

/// Rows of one protocol in tau order.
std::vector<SweepRow> rows_for(const SweepResult& result, Protocol protocol);

// Serialization. The CSV header is `tau,protocol,fidelity,norm_drift,steps,action`
// with 12 significant digits; the JSON sidecar carries model parameters,
// timescales and the package version.
void write_sweep_csv(const SweepResult& result, std::ostream& out);
std::string sweep_metadata_json(const SweepResult& result);
/// Writes `path` and its `.json` sidecar.
void write_sweep(const SweepResult& result, const std::filesystem::path& path);
std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

/// Parse a JSON sweep configuration. Model keys sit at the top level:
///   {"model": "lz"|"ising"|"fc", "delta"|"N"|"eta": ..., "omega": ...,
///    "n_max": ..., "g0": ..., "g_tau": ..., "protocols": [...],
///    "tau": {"min": ..., "max": ..., "points": ..., "spacing": "log"|"linear"},
///    "output": "...", "threads": ...}
/// Missing optional keys take the defaults of default_sweep_spec().
SweepSpec parse_sweep_spec(std::string_view json_text);
SweepSpec load_sweep_spec(const std::filesystem::path& path);

/// Model from the same JSON keys (model selector plus parameters).
ModelSystem parse_model(std::string_view json_text);

}  // namespace minact
