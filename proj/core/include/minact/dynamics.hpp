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
#include <span>
#include <vector>

#include "minact/linalg.hpp"
#include "minact/models.hpp"
#include "minact/ramp.hpp"

namespace minact {

enum class Propagation {
  kAuto,   // closed form for two-level blocks, Krylov otherwise
  kDense,  // eigendecomposition of every step generator
};

struct EvolveOptions {
  /// Initial step count; 0 selects max(1000, ceil(200 tau max_gap)).
  std::size_t steps = 0;
  /// Step doublings allowed while chasing convergence.
  int max_doublings = 2;
  /// Fidelity change under step doubling accepted as converged.
  double tolerance = 1e-6;
  Propagation propagation = Propagation::kAuto;
};

/// Outcome of one propagation at a fixed step count.
struct PropagationRun {
  /// One state per independent block (a single block except for the Ising
  /// chain, which has one per momentum mode).
  std::vector<StateVector> final_states;
  std::vector<double> block_fidelities;
  double fidelity = 0.0;
  double norm_drift = 0.0;
  std::size_t steps = 0;
};

struct EvolutionResult {
  std::vector<StateVector> final_states;
  std::vector<double> block_fidelities;
  double fidelity = 0.0;
  double norm_drift = 0.0;
  std::size_t steps = 0;
  bool converged = false;
  /// |F(steps) - F(steps / 2)| of the last comparison.
  double last_delta = 0.0;
};

/// Propagate the instantaneous ground state at G(0) for a duration tau with
/// `steps` midpoint-sampled exact exponentials, then compare with the
/// ground state at G(1).
PropagationRun propagate(const ModelSystem& model, const RampProfile& ramp,
                         double tau, std::size_t steps,
                         Propagation propagation = Propagation::kAuto);

/// propagate() with step doubling until the fidelity settles. The returned
/// fidelity is the one of the finest run.
EvolutionResult evolve(const ModelSystem& model, const RampProfile& ramp,
                       double tau, const EvolveOptions& options = {});

/// Default initial step count for evolve().
std::size_t default_step_count(const ModelSystem& model, const RampProfile& ramp,
                               double tau);

/// |<psi|phi>|^2.
double fidelity(const StateVector& psi, const StateVector& phi);

/// Product of per-mode fidelities; requires one entry per momentum mode.
double tfim_fidelity(const IsingChain& chain, std::span<const double> mode_fidelities);

/// 1 - exp(-pi delta^2 tau / (2 |g0|)).
double lz_formula_fidelity(double delta, double g0, double tau);

}  // namespace minact
