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
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "minact/ramp.hpp"

namespace minact {

/// Action density ingredients: ||dH/dt||^2 = weight(g) (dg/dt)^2 and the
/// relevant spectral gap gap(g), both in units with hbar = 1. The density is
/// weight(g) / gap(g)^4 times (dg/dt)^2.
struct ActionModel {
  std::function<double(double)> weight;
  std::function<double(double)> gap;
  double domain_lo = -std::numeric_limits<double>::infinity();
  double domain_hi = std::numeric_limits<double>::infinity();
  std::string name;

  /// weight(g) / gap(g)^4.
  double metric(double g) const;
};

/// H = delta sx + g sz: weight 2, gap 2 sqrt(g^2 + delta^2).
ActionModel lz_action_model(double delta);

/// Lowest momentum mode of the N-site Ising chain: weight 8 omega^2,
/// gap 4 omega sqrt(g^2 - 2 g cos(pi / N) + 1).
ActionModel ising_action_model(int sites, double omega = 1.0);

/// Thermodynamic-limit fully connected model on 0 < g < 1: gap
/// 2 omega sqrt(1 - g^2), weight 16 omega^2 g^2 so that the density is
/// g^2 / (omega^2 (1 - g^2)^2).
ActionModel fc_action_model(double omega = 1.0);

/// Gap tabulated at strictly increasing g with linear interpolation and a
/// constant weight.
ActionModel tabulated_action_model(std::vector<double> g, std::vector<double> gap,
                                   double weight = 1.0);

/// S = (1 / tau) * int_0^1 weight(G) G'(s)^2 / gap(G)^4 ds.
///
/// Uses the profile's analytic derivative when it has one. Throws
/// std::invalid_argument when tau <= 0 or the ramp leaves the model domain,
/// NumericalError when the quadrature does not converge.
double evaluate_action(const ActionModel& model, const RampProfile& ramp,
                       double tau);

/// metric(G(s)) * G'(s)^2, constant along an extremal of the action.
double first_integral(const ActionModel& model, const RampProfile& ramp, double s);

/// Extremal of the action between g0 and g_tau.
///
/// The Lagrangian A(g) g'^2 with A = metric has no explicit s dependence, so
/// A(G) G'^2 is conserved and s(g) = int_{g0}^{g} sqrt(A) / int_{g0}^{g_tau}
/// sqrt(A). The returned profile samples G on grid_size uniform s nodes,
/// each found by inverting s(g), with node slopes from the first integral.
/// Intervals whose cubic interpolant breaks the first integral by more than
/// 1e-9 are bisected (within a node budget), so the profile may carry extra
/// nodes.
RampProfile solve_euler_lagrange(const ActionModel& model, double g0,
                                 double g_tau, std::size_t grid_size);

}  // namespace minact
