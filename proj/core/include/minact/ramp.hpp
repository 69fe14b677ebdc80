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
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "minact/interpolation.hpp"

namespace minact {

/// Endpoints and duration of a control ramp g(t) = G(t / tau).
struct RampSpec {
  double g0 = 0.0;
  double g_tau = 0.0;
  double tau = 1.0;
};

enum class RampKind {
  kLinear,
  kLzAction,
  kFamilyAction,
  kFcAction,
  kGarbe,
  kNumericEl,
};

std::string_view to_string(RampKind kind);

/// A continuous profile s -> G(s) on the unit interval with fixed endpoints.
///
/// Profiles are immutable and cheap to copy; the evaluators they hold are
/// pure, so a profile may be shared between threads. Arguments outside
/// [0, 1] are clamped.
class RampProfile {
 public:
  using Function = std::function<double(double)>;

  /// derivative may be empty, in which case derivative() falls back to a
  /// Richardson-refined centered difference.
  RampProfile(RampKind kind, double g0, double g_tau, Function value,
              Function derivative = {});

  /// Profile backed by monotone cubic interpolation of sampled nodes; the
  /// first and last node ordinates become the endpoints.
  static RampProfile sampled(RampKind kind, MonotoneCubic samples);

  /// G(s) = g for all s.
  static RampProfile constant(RampKind kind, double g);

  double operator()(double s) const;
  double derivative(double s) const;

  RampKind kind() const { return kind_; }
  double g0() const { return g0_; }
  double g_tau() const { return g_tau_; }
  bool has_analytic_derivative() const { return static_cast<bool>(derivative_); }
  bool is_constant() const { return g0_ == g_tau_; }

  /// Interpolation nodes for numerically synthesized profiles.
  const std::optional<MonotoneCubic>& samples() const { return samples_; }

  /// `points` equally spaced (s, G(s)) pairs including both endpoints.
  std::vector<std::pair<double, double>> tabulate(std::size_t points) const;

 private:
  RampKind kind_;
  double g0_;
  double g_tau_;
  Function value_;
  Function derivative_;
  std::optional<MonotoneCubic> samples_;
};

/// G(s) = g0 + (g_tau - g0) s.
RampProfile linear_ramp(const RampSpec& spec);

/// Minimal-action ramp of the two-level avoided crossing H = delta sx + g sz,
/// sweeping symmetrically from g0 to -g0:
///   G(s) = -delta tan[(2s - 1) atan(g0 / delta)].
RampProfile lz_optimal_ramp(double g0, double delta);

/// Minimal-action ramp for a Lorentzian-squared action density centred on
/// beta with width gamma. The target endpoint is fixed to 2 - g0:
///   G(s) = beta + gamma tan[(1 - s) atan((g0 - beta) / gamma)
///                           - s atan((g0 + beta - 2) / gamma)].
RampProfile family_optimal_ramp(double g0, double beta, double gamma);

/// family_optimal_ramp tuned to the lowest momentum mode of an N-site
/// periodic Ising chain: beta = cos(pi / N), gamma = sin(pi / N).
RampProfile ising_optimal_ramp(double g0, int sites);

/// Minimal-action ramp for a gap 2 sqrt(1 - g^2) with drive weight g^2,
/// valid for endpoints inside (0, 1):
///   G(s) = sqrt[(g0^2 - 1) ((g_tau^2 - 1) / (g0^2 - 1))^s + 1].
RampProfile fc_optimal_ramp(double g0, double g_tau);

/// Critical-exponent based comparison ramp for the fully connected model:
///   G(s) = sqrt(2 - 2 / (s^2 + 1)) (g_tau - g0) + g0.
RampProfile garbe_ramp(double g0, double g_tau);

}  // namespace minact
