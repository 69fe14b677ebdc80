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

#include "minact/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "minact/errors.hpp"

namespace minact {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd Kronrod nodes (1, 3, 5) and the centre.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr int kMaxIntervals = 4000;

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  double magnitude = std::abs(kronrod);
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    kronrod += kKronrodWeights[i] * (f1 + f2);
    magnitude += kKronrodWeights[i] * (std::abs(f1) + std::abs(f2));
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * (f1 + f2);
  }
  Panel p{a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
  // Differences at the rounding level of the panel carry no information.
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() * magnitude * std::abs(half);
  if (p.error < floor) p.error = floor;
  return p;
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, QuadratureTolerance tol) {
  if (a == b) return {0.0, 0.0};
  const double sign = b > a ? 1.0 : -1.0;
  if (b < a) std::swap(a, b);

  std::priority_queue<Panel> panels;
  Panel first = gauss_kronrod(f, a, b);
  double value = first.value;
  double error = first.error;
  panels.push(first);

  auto target = [&] { return std::max(tol.absolute, tol.relative * std::abs(value)); };
  int count = 1;
  while (error > target() && count < kMaxIntervals && std::isfinite(value)) {
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    panels.pop();
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++count;
  }

  // Recompute the sums from the panels to shed accumulated update rounding.
  value = 0.0;
  error = 0.0;
  while (!panels.empty()) {
    value += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }

  if (!std::isfinite(value) || !std::isfinite(error)) {
    throw NumericalError("quadrature produced a non-finite value",
                         std::numeric_limits<double>::infinity());
  }
  if (error > target()) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "quadrature on [" << a << ", " << b
        << "] did not converge: estimated error " << error << " exceeds " << target();
    throw NumericalError(msg.str(), error);
  }
  return {sign * value, error};
}

}  // namespace minact
