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

#include "minact/ramp.hpp"

#include <algorithm>
#include <memory>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace minact {

std::string_view to_string(RampKind kind) {
  switch (kind) {
    case RampKind::kLinear: return "linear";
    case RampKind::kLzAction: return "lz-action";
    case RampKind::kFamilyAction: return "family-action";
    case RampKind::kFcAction: return "fc-action";
    case RampKind::kGarbe: return "garbe";
    case RampKind::kNumericEl: return "numeric-EL";
  }
  return "unknown";
}

RampProfile::RampProfile(RampKind kind, double g0, double g_tau, Function value,
                         Function derivative)
    : kind_(kind),
      g0_(g0),
      g_tau_(g_tau),
      value_(std::move(value)),
      derivative_(std::move(derivative)) {
  if (!value_) throw std::invalid_argument("RampProfile: empty evaluator");
}

RampProfile RampProfile::sampled(RampKind kind, MonotoneCubic samples) {
  const auto values = samples.values();
  const auto nodes = samples.nodes();
  if (nodes.front() != 0.0 || nodes.back() != 1.0) {
    throw std::invalid_argument("RampProfile::sampled: nodes must span [0, 1]");
  }
  auto shared = std::make_shared<const MonotoneCubic>(samples);
  RampProfile profile(
      kind, values.front(), values.back(),
      [shared](double s) { return (*shared)(s); },
      [shared](double s) { return shared->derivative(s); });
  profile.samples_ = std::move(samples);
  return profile;
}

RampProfile RampProfile::constant(RampKind kind, double g) {
  return RampProfile(kind, g, g, [g](double) { return g; },
                     [](double) { return 0.0; });
}

double RampProfile::operator()(double s) const {
  // Endpoints are returned exactly rather than through the formula.
  if (s <= 0.0) return g0_;
  if (s >= 1.0) return g_tau_;
  return value_(s);
}

double RampProfile::derivative(double s) const {
  s = std::clamp(s, 0.0, 1.0);
  if (derivative_) return derivative_(s);
  // One-sided near the ends, centred otherwise; one Richardson refinement.
  auto diff = [&](double h) {
    const double lo = std::max(0.0, s - h);
    const double hi = std::min(1.0, s + h);
    return (value_(hi) - value_(lo)) / (hi - lo);
  };
  constexpr double h = 1e-4;
  return (4.0 * diff(h / 2) - diff(h)) / 3.0;
}

std::vector<std::pair<double, double>> RampProfile::tabulate(std::size_t points) const {
  if (points < 2) throw std::invalid_argument("tabulate: need at least 2 points");
  std::vector<std::pair<double, double>> out;
  out.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(points - 1);
    out.emplace_back(s, (*this)(s));
  }
  return out;
}

RampProfile linear_ramp(const RampSpec& spec) {
  if (!(spec.tau > 0.0)) throw std::invalid_argument("linear_ramp: tau must be positive");
  const double g0 = spec.g0;
  const double span = spec.g_tau - spec.g0;
  if (span == 0.0) return RampProfile::constant(RampKind::kLinear, g0);
  return RampProfile(
      RampKind::kLinear, g0, spec.g_tau,
      [g0, span, g_tau = spec.g_tau](double s) {
        return s == 1.0 ? g_tau : g0 + span * s;
      },
      [span](double) { return span; });
}

RampProfile lz_optimal_ramp(double g0, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("lz_optimal_ramp: delta must be positive");
  if (g0 == 0.0) return RampProfile::constant(RampKind::kLzAction, 0.0);
  const double angle = std::atan(g0 / delta);
  return RampProfile(
      RampKind::kLzAction, g0, -g0,
      [delta, angle](double s) { return -delta * std::tan((2.0 * s - 1.0) * angle); },
      [delta, angle](double s) {
        const double c = std::cos((2.0 * s - 1.0) * angle);
        return -2.0 * delta * angle / (c * c);
      });
}

RampProfile family_optimal_ramp(double g0, double beta, double gamma) {
  if (!(gamma > 0.0)) throw std::invalid_argument("family_optimal_ramp: gamma must be positive");
  const double g_tau = 2.0 - g0;
  if (g0 == g_tau) return RampProfile::constant(RampKind::kFamilyAction, g0);
  const double start = std::atan((g0 - beta) / gamma);
  const double end = std::atan((g0 + beta - 2.0) / gamma);
  return RampProfile(
      RampKind::kFamilyAction, g0, g_tau,
      [=](double s) { return beta + gamma * std::tan((1.0 - s) * start - s * end); },
      [=](double s) {
        const double c = std::cos((1.0 - s) * start - s * end);
        return gamma * (-start - end) / (c * c);
      });
}

RampProfile ising_optimal_ramp(double g0, int sites) {
  if (sites < 4 || sites % 2 != 0) {
    throw std::invalid_argument("ising_optimal_ramp: N must be even and >= 4");
  }
  const double q = std::numbers::pi / sites;
  return family_optimal_ramp(g0, std::cos(q), std::sin(q));
}

RampProfile fc_optimal_ramp(double g0, double g_tau) {
  auto inside = [](double g) { return g > 0.0 && g < 1.0; };
  if (!inside(g0) || !inside(g_tau)) {
    throw std::invalid_argument("fc_optimal_ramp: endpoints must lie in (0, 1)");
  }
  if (g0 == g_tau) return RampProfile::constant(RampKind::kFcAction, g0);
  const double a = g0 * g0 - 1.0;
  const double ratio = (g_tau * g_tau - 1.0) / a;
  const double log_ratio = std::log(ratio);
  return RampProfile(
      RampKind::kFcAction, g0, g_tau,
      [=](double s) { return std::sqrt(a * std::pow(ratio, s) + 1.0); },
      [=](double s) {
        const double r = std::pow(ratio, s);
        return a * r * log_ratio / (2.0 * std::sqrt(a * r + 1.0));
      });
}

RampProfile garbe_ramp(double g0, double g_tau) {
  if (g0 > g_tau) throw std::invalid_argument("garbe_ramp: requires g0 < g_tau");
  if (g0 == g_tau) return RampProfile::constant(RampKind::kGarbe, g0);
  const double span = g_tau - g0;
  return RampProfile(
      RampKind::kGarbe, g0, g_tau,
      [=](double s) { return std::sqrt(2.0 - 2.0 / (s * s + 1.0)) * span + g0; },
      [=](double s) {
        const double q = s * s + 1.0;
        return std::numbers::sqrt2 * span / (q * std::sqrt(q));
      });
}

}  // namespace minact
