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

#include "minact/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "minact/propagator.hpp"

namespace minact {

namespace {

// z(g) = offset + slope g, x = coupling.
struct AffineTwoLevel {
  double offset = 0.0;
  double slope = 1.0;
  double coupling = 0.0;

  TwoLevelField at(double g) const { return {offset + slope * g, coupling}; }
};

std::vector<AffineTwoLevel> two_level_blocks(const ModelSystem& model) {
  if (const auto* lz = std::get_if<LandauZener>(&model)) {
    if (!(lz->delta > 0.0)) throw std::invalid_argument("LandauZener: delta must be positive");
    return {{0.0, 1.0, lz->delta}};
  }
  if (const auto* chain = std::get_if<IsingChain>(&model)) {
    std::vector<AffineTwoLevel> blocks;
    for (const MomentumMode& mode : tfim_subspaces(*chain)) {
      blocks.push_back({-2.0 * mode.omega * std::cos(mode.k), 2.0 * mode.omega,
                        2.0 * mode.omega * std::sin(mode.k)});
    }
    return blocks;
  }
  return {};
}

Eigen::Matrix2d dense(TwoLevelField h) {
  Eigen::Matrix2d m;
  m << h.z, h.x, h.x, -h.z;
  return m;
}

Eigen::Vector2cd two_level_ground(TwoLevelField h) {
  return ground_state(Eigen::MatrixXd(dense(h))).state;
}

void check_run(double tau, std::size_t steps) {
  if (!(tau > 0.0)) throw std::invalid_argument("propagate: tau must be positive");
  if (steps < 100) throw std::invalid_argument("propagate: steps must be >= 100");
}

double midpoint(std::size_t step, std::size_t steps) {
  return (static_cast<double>(step) + 0.5) / static_cast<double>(steps);
}

PropagationRun propagate_two_level(const std::vector<AffineTwoLevel>& blocks,
                                   const RampProfile& ramp, double tau,
                                   std::size_t steps, Propagation propagation) {
  const double dt = tau / static_cast<double>(steps);
  std::vector<Eigen::Vector2cd> states;
  states.reserve(blocks.size());
  for (const auto& b : blocks) states.push_back(two_level_ground(b.at(ramp(0.0))));

  double drift = 0.0;
  for (std::size_t j = 0; j < steps; ++j) {
    const double g = ramp(midpoint(j, steps));
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (propagation == Propagation::kDense) {
        Eigen::VectorXcd psi = states[b];
        apply_dense_step(dense(blocks[b].at(g)), dt, psi);
        states[b] = psi;
      } else {
        apply_two_level_step(blocks[b].at(g), dt, states[b]);
      }
      drift = std::max(drift, std::abs(states[b].norm() - 1.0));
    }
  }

  PropagationRun run;
  run.steps = steps;
  run.norm_drift = drift;
  run.fidelity = 1.0;
  const double g_end = ramp(1.0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const StateVector target = two_level_ground(blocks[b].at(g_end));
    const StateVector final_state = states[b];
    const double f = fidelity(final_state, target);
    run.block_fidelities.push_back(f);
    run.fidelity *= f;
    run.final_states.push_back(final_state);
  }
  return run;
}

PropagationRun propagate_bosonic(const FullyConnectedModel& model, const RampProfile& ramp,
                                 double tau, std::size_t steps, Propagation propagation) {
  const double dt = tau / static_cast<double>(steps);
  Eigen::VectorXcd psi = ground_state(model.hamiltonian(ramp(0.0)).dense()).state;
  KrylovPropagator krylov(model.dimension());

  double drift = 0.0;
  for (std::size_t j = 0; j < steps; ++j) {
    const PentadiagonalMatrix h = model.hamiltonian(ramp(midpoint(j, steps)));
    if (propagation == Propagation::kDense) {
      apply_dense_step(h.dense(), dt, psi);
    } else {
      krylov.step(h, dt, psi);
    }
    drift = std::max(drift, std::abs(psi.norm() - 1.0));
  }

  PropagationRun run;
  run.steps = steps;
  run.norm_drift = drift;
  const StateVector target = ground_state(model.hamiltonian(ramp(1.0)).dense()).state;
  run.fidelity = fidelity(psi, target);
  run.block_fidelities = {run.fidelity};
  run.final_states = {psi};
  return run;
}

}  // namespace

PropagationRun propagate(const ModelSystem& model, const RampProfile& ramp, double tau,
                         std::size_t steps, Propagation propagation) {
  check_run(tau, steps);
  if (const auto* fc = std::get_if<FullyConnectedModel>(&model)) {
    return propagate_bosonic(*fc, ramp, tau, steps, propagation);
  }
  return propagate_two_level(two_level_blocks(model), ramp, tau, steps, propagation);
}

std::size_t default_step_count(const ModelSystem& model, const RampProfile& ramp,
                               double tau) {
  constexpr int kSamples = 257;
  const auto blocks = two_level_blocks(model);
  const auto* fc = std::get_if<FullyConnectedModel>(&model);
  double max_gap = 0.0;
  for (int i = 0; i < kSamples; ++i) {
    const double g = ramp(static_cast<double>(i) / (kSamples - 1));
    if (fc != nullptr) max_gap = std::max(max_gap, fc->thermodynamic_gap(g));
    for (const auto& b : blocks) max_gap = std::max(max_gap, b.at(g).splitting());
  }
  const double wanted = std::ceil(200.0 * tau * max_gap);
  return std::max<std::size_t>(1000, static_cast<std::size_t>(wanted));
}

EvolutionResult evolve(const ModelSystem& model, const RampProfile& ramp, double tau,
                       const EvolveOptions& options) {
  std::size_t steps = options.steps != 0 ? options.steps : default_step_count(model, ramp, tau);
  PropagationRun run = propagate(model, ramp, tau, steps, options.propagation);

  EvolutionResult result;
  result.last_delta = std::numeric_limits<double>::infinity();
  for (int d = 0; d < options.max_doublings; ++d) {
    steps *= 2;
    PropagationRun finer = propagate(model, ramp, tau, steps, options.propagation);
    result.last_delta = std::abs(finer.fidelity - run.fidelity);
    run = std::move(finer);
    if (result.last_delta < options.tolerance) {
      result.converged = true;
      break;
    }
  }
  result.final_states = std::move(run.final_states);
  result.block_fidelities = std::move(run.block_fidelities);
  result.fidelity = run.fidelity;
  result.norm_drift = run.norm_drift;
  result.steps = run.steps;
  return result;
}

double fidelity(const StateVector& psi, const StateVector& phi) {
  if (psi.size() != phi.size()) throw std::invalid_argument("fidelity: dimension mismatch");
  return std::norm(psi.dot(phi));
}

double tfim_fidelity(const IsingChain& chain, std::span<const double> mode_fidelities) {
  const auto expected = static_cast<std::size_t>(chain.sites() / 2);
  if (mode_fidelities.size() != expected) {
    throw std::invalid_argument("tfim_fidelity: need one fidelity per momentum mode");
  }
  double product = 1.0;
  for (double f : mode_fidelities) product *= f;
  return product;
}

double lz_formula_fidelity(double delta, double g0, double tau) {
  if (g0 == 0.0) throw std::invalid_argument("lz_formula_fidelity: g0 must be nonzero");
  if (tau < 0.0) throw std::invalid_argument("lz_formula_fidelity: tau must be >= 0");
  return 1.0 - std::exp(-std::numbers::pi * delta * delta * tau / (2.0 * std::abs(g0)));
}

}  // namespace minact
