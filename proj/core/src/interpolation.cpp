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

#include "minact/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace minact {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  validate();
  const std::size_t n = x_.size();
  d_.assign(n, 0.0);
  // Three-point (non-centred) derivative estimates, limited below.
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) {
      d_[i] = (y_[1] - y_[0]) / (x_[1] - x_[0]);
    } else if (i + 1 == n) {
      d_[i] = (y_[i] - y_[i - 1]) / (x_[i] - x_[i - 1]);
    } else {
      const double h0 = x_[i] - x_[i - 1];
      const double h1 = x_[i + 1] - x_[i];
      const double s0 = (y_[i] - y_[i - 1]) / h0;
      const double s1 = (y_[i + 1] - y_[i]) / h1;
      d_[i] = (h1 * s0 + h0 * s1) / (h0 + h1);
    }
  }
  limit_slopes();
}

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y,
                             std::vector<double> slopes)
    : x_(std::move(x)), y_(std::move(y)), d_(std::move(slopes)) {
  validate();
  if (d_.size() != x_.size()) {
    throw std::invalid_argument("MonotoneCubic: slope count mismatch");
  }
  limit_slopes();
}

void MonotoneCubic::validate() const {
  if (x_.size() < 2 || x_.size() != y_.size()) {
    throw std::invalid_argument("MonotoneCubic: need >= 2 nodes with matching values");
  }
  for (std::size_t i = 1; i < x_.size(); ++i) {
    if (!(x_[i] > x_[i - 1])) {
      throw std::invalid_argument("MonotoneCubic: nodes must be strictly increasing");
    }
  }
  const bool increasing = y_.back() >= y_.front();
  for (std::size_t i = 1; i < y_.size(); ++i) {
    const double step = y_[i] - y_[i - 1];
    if ((increasing && step < 0.0) || (!increasing && step > 0.0)) {
      throw std::invalid_argument("MonotoneCubic: values must be monotone");
    }
  }
}

// Fritsch-Carlson: zero slope on flat segments, slopes of the secant's sign,
// and (alpha, beta) pulled into the circle of radius 3.
void MonotoneCubic::limit_slopes() {
  const std::size_t n = x_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(d_[i])) {
      const std::size_t j = i + 1 < n ? i : i - 1;
      const double secant = (y_[j + 1] - y_[j]) / (x_[j + 1] - x_[j]);
      d_[i] = 3.0 * secant;
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double secant = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
    if (secant == 0.0) {
      d_[i] = 0.0;
      d_[i + 1] = 0.0;
      continue;
    }
    if (d_[i] / secant < 0.0) d_[i] = 0.0;
    if (d_[i + 1] / secant < 0.0) d_[i + 1] = 0.0;
    const double a = d_[i] / secant;
    const double b = d_[i + 1] / secant;
    const double r2 = a * a + b * b;
    if (r2 > 9.0) {
      const double t = 3.0 / std::sqrt(r2);
      d_[i] = t * a * secant;
      d_[i + 1] = t * b * secant;
    }
  }
}

std::size_t MonotoneCubic::segment(double x) const {
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t i = it == x_.begin() ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
  return std::min(i, x_.size() - 2);
}

double MonotoneCubic::operator()(double x) const {
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
}

double MonotoneCubic::derivative(double x) const {
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double dh00 = (6 * t2 - 6 * t) / h;
  const double dh10 = 3 * t2 - 4 * t + 1;
  const double dh01 = (-6 * t2 + 6 * t) / h;
  const double dh11 = 3 * t2 - 2 * t;
  return dh00 * y_[i] + dh10 * d_[i] + dh01 * y_[i + 1] + dh11 * d_[i + 1];
}

}  // namespace minact
