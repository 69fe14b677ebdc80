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

#include "minact/action.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/math/tools/roots.hpp>

#include "minact/errors.hpp"
#include "minact/quadrature.hpp"

namespace minact {

double ActionModel::metric(double g) const {
  const double gap_value = gap(g);
  const double g2 = gap_value * gap_value;
  return weight(g) / (g2 * g2);
}

ActionModel lz_action_model(double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("lz_action_model: delta must be positive");
  ActionModel model;
  model.weight = [](double) { return 2.0; };
  model.gap = [delta](double g) { return 2.0 * std::sqrt(g * g + delta * delta); };
  model.name = "lz";
  return model;
}

ActionModel ising_action_model(int sites, double omega) {
  if (sites < 4 || sites % 2 != 0) {
    throw std::invalid_argument("ising_action_model: N must be even and >= 4");
  }
  if (!(omega > 0.0)) throw std::invalid_argument("ising_action_model: omega must be positive");
  const double c = std::cos(std::numbers::pi / sites);
  ActionModel model;
  model.weight = [omega](double) { return 8.0 * omega * omega; };
  model.gap = [omega, c](double g) {
    return 4.0 * omega * std::sqrt(g * g - 2.0 * g * c + 1.0);
  };
  model.name = "ising";
  return model;
}

ActionModel fc_action_model(double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("fc_action_model: omega must be positive");
  ActionModel model;
  model.weight = [omega](double g) { return 16.0 * omega * omega * g * g; };
  model.gap = [omega](double g) { return 2.0 * omega * std::sqrt(1.0 - g * g); };
  model.domain_lo = 0.0;
  model.domain_hi = 1.0;
  model.name = "fc";
  return model;
}

ActionModel tabulated_action_model(std::vector<double> g, std::vector<double> gap,
                                   double weight) {
  if (g.size() < 2 || g.size() != gap.size()) {
    throw std::invalid_argument("tabulated_action_model: need >= 2 (g, gap) rows");
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i > 0 && !(g[i] > g[i - 1])) {
      throw std::invalid_argument("tabulated_action_model: g must be strictly increasing");
    }
    if (!(gap[i] >= 0.0)) throw std::invalid_argument("tabulated_action_model: negative gap");
  }
  if (!(weight >= 0.0)) throw std::invalid_argument("tabulated_action_model: negative weight");
  ActionModel model;
  model.domain_lo = g.front();
  model.domain_hi = g.back();
  model.weight = [weight](double) { return weight; };
  model.gap = [xs = std::move(g), ys = std::move(gap)](double x) {
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t i = it == xs.begin() ? 0 : static_cast<std::size_t>(it - xs.begin()) - 1;
    i = std::min(i, xs.size() - 2);
    const double t = (x - xs[i]) / (xs[i + 1] - xs[i]);
    return ys[i] + t * (ys[i + 1] - ys[i]);
  };
  model.name = "tabulated";
  return model;
}

namespace {

void check_domain(const ActionModel& model, double a, double b, const char* who) {
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  if (lo < model.domain_lo || hi > model.domain_hi) {
    throw std::invalid_argument(std::string(who) + ": ramp leaves the action model domain");
  }
}

}  // namespace

double evaluate_action(const ActionModel& model, const RampProfile& ramp, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("evaluate_action: tau must be positive");
  if (ramp.is_constant()) return 0.0;
  check_domain(model, ramp.g0(), ramp.g_tau(), "evaluate_action");

  auto density = [&](double s) {
    const double d = ramp.derivative(s);
    return model.metric(ramp(s)) * d * d;
  };

  double total = 0.0;
  if (const auto& samples = ramp.samples()) {
    // Piecewise cubic: integrate node to node so every panel is smooth.
    const auto nodes = samples->nodes();
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
      total += integrate(density, nodes[i], nodes[i + 1]).value;
    }
  } else {
    total = integrate(density, 0.0, 1.0).value;
  }
  return total / tau;
}

double first_integral(const ActionModel& model, const RampProfile& ramp, double s) {
  const double d = ramp.derivative(s);
  return model.metric(ramp(s)) * d * d;
}

RampProfile solve_euler_lagrange(const ActionModel& model, double g0, double g_tau,
                                 std::size_t grid_size) {
  if (grid_size < 3) throw std::invalid_argument("solve_euler_lagrange: grid_size must be >= 3");
  if (g0 == g_tau) return RampProfile::constant(RampKind::kNumericEl, g0);
  check_domain(model, g0, g_tau, "solve_euler_lagrange");

  // Work in the oriented coordinate u = |g - g0| in [0, length].
  const double sign = g_tau > g0 ? 1.0 : -1.0;
  const double length = std::abs(g_tau - g0);
  auto root_metric = [&](double u) {
    const double m = model.metric(g0 + sign * u);
    return m > 0.0 ? std::sqrt(m) : 0.0;
  };

  const std::size_t segments = grid_size - 1;
  std::vector<double> knots(grid_size);
  std::vector<double> cumulative(grid_size, 0.0);
  for (std::size_t k = 0; k < grid_size; ++k) {
    knots[k] = length * static_cast<double>(k) / static_cast<double>(segments);
  }
  knots.back() = length;
  try {
    for (std::size_t k = 0; k < segments; ++k) {
      const double piece = integrate(root_metric, knots[k], knots[k + 1]).value;
      if (!(piece > 0.0)) {
        throw std::invalid_argument(
            "solve_euler_lagrange: action metric vanishes on a whole interval");
      }
      cumulative[k + 1] = cumulative[k] + piece;
    }
  } catch (const NumericalError& e) {
    throw NumericalError(
        std::string("solve_euler_lagrange: sqrt(metric) is not integrable on the "
                    "ramp interval (") + e.what() + ")",
        e.estimate());
  }
  const double total = cumulative.back();

  auto invert = [&](double s) {
    const double target = s * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), target);
    std::size_t k = static_cast<std::size_t>(it - cumulative.begin()) - 1;
    k = std::min(k, segments - 1);
    const double lo = knots[k];
    const double hi = knots[k + 1];
    const double base = cumulative[k];
    auto residual = [&](double u) {
      const double f = base + integrate(root_metric, lo, u).value - target;
      return std::make_pair(f, root_metric(u));
    };
    const double fraction = (target - base) / (cumulative[k + 1] - base);
    const double guess = lo + std::clamp(fraction, 0.0, 1.0) * (hi - lo);
    std::uintmax_t iterations = 50;
    return g0 + sign * boost::math::tools::newton_raphson_iterate(residual, guess, lo, hi, 50,
                                                                  iterations);
  };
  // Along the extremal sqrt(A) dG/ds equals the total, so A G'^2 = total^2.
  auto slope_at = [&](double g) {
    const double r = root_metric(std::abs(g - g0));
    return r > 0.0 ? sign * total / r : std::numeric_limits<double>::infinity();
  };

  struct Node {
    double s;
    double g;
    double slope;
  };
  std::vector<Node> uniform(grid_size);
  for (std::size_t j = 0; j < grid_size; ++j) {
    const double s = j + 1 == grid_size ? 1.0 : static_cast<double>(j) / segments;
    const double g = j == 0 ? g0 : (j + 1 == grid_size ? g_tau : invert(s));
    uniform[j] = {s, g, slope_at(g)};
  }

  // Bisect intervals whose cubic Hermite interpolant breaks the first integral
  // by more than kInvariantTol, pass by pass, so the invariant also holds
  // between nodes. Smooth metrics settle within a few thousand nodes; the
  // budget stops refinement around kinks (e.g. tabulated gaps).
  constexpr double kInvariantTol = 1e-9;
  constexpr int kMaxPasses = 30;
  const std::size_t budget = std::max<std::size_t>(20000, 16 * grid_size);
  const double invariant = total * total;
  auto breaks_invariant = [&](const Node& a, const Node& b) {
    if (!std::isfinite(a.slope) || !std::isfinite(b.slope)) return false;
    // Quarter points: the Hermite slope error vanishes at the midpoint.
    const double h = b.s - a.s;
    for (double t : {0.25, 0.75}) {
      const double t2 = t * t;
      const double t3 = t2 * t;
      const double g = (2 * t3 - 3 * t2 + 1) * a.g + (t3 - 2 * t2 + t) * h * a.slope +
                       (3 * t2 - 2 * t3) * b.g + (t3 - t2) * h * b.slope;
      const double d = (6 * t2 - 6 * t) / h * (a.g - b.g) + (3 * t2 - 4 * t + 1) * a.slope +
                       (3 * t2 - 2 * t) * b.slope;
      if (!(std::abs(model.metric(g) * d * d / invariant - 1.0) <= kInvariantTol)) return true;
    }
    return false;
  };
  std::vector<Node> nodes = std::move(uniform);
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    std::vector<std::size_t> split;
    for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
      if (breaks_invariant(nodes[j], nodes[j + 1])) split.push_back(j);
    }
    if (split.empty() || nodes.size() + split.size() > budget) break;
    std::vector<Node> finer;
    finer.reserve(nodes.size() + split.size());
    std::size_t next = 0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      finer.push_back(nodes[j]);
      if (next < split.size() && split[next] == j) {
        const double s = 0.5 * (nodes[j].s + nodes[j + 1].s);
        const double g = invert(s);
        finer.push_back({s, g, slope_at(g)});
        ++next;
      }
    }
    nodes = std::move(finer);
  }

  std::vector<double> s_nodes;
  std::vector<double> g_nodes;
  std::vector<double> slopes;
  for (const Node& n : nodes) {
    s_nodes.push_back(n.s);
    g_nodes.push_back(n.g);
    slopes.push_back(n.slope);
  }
  return RampProfile::sampled(
      RampKind::kNumericEl,
      MonotoneCubic(std::move(s_nodes), std::move(g_nodes), std::move(slopes)));
}

}  // namespace minact
