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

#include <functional>

namespace minact {

struct QuadratureTolerance {
  double absolute = 1e-10;
  double relative = 1e-9;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b]. The integrand
/// is never evaluated at the endpoints, so integrable endpoint singularities
/// are tolerated. Throws NumericalError when the error estimate misses both
/// tolerances or the result is not finite.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, QuadratureTolerance tol = {});

}  // namespace minact
