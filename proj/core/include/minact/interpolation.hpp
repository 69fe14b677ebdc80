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

#include <span>
#include <vector>

namespace minact {

/// Piecewise-cubic Hermite interpolant that preserves monotonicity of the
/// data (Fritsch-Carlson slope limiting). Nodes must be strictly increasing
/// and the ordinates monotone.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;

  /// Slopes estimated from the data.
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  /// Caller-supplied node slopes; non-finite slopes and slopes violating the
  /// monotone region are limited.
  MonotoneCubic(std::vector<double> x, std::vector<double> y,
                std::vector<double> slopes);

  double operator()(double x) const;
  double derivative(double x) const;

  std::span<const double> nodes() const { return x_; }
  std::span<const double> values() const { return y_; }
  std::span<const double> slopes() const { return d_; }

 private:
  void validate() const;
  void limit_slopes();
  std::size_t segment(double x) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> d_;
};

}  // namespace minact
