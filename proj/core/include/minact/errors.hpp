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

#include <stdexcept>
#include <string>

namespace minact {

// Raised when a numerical procedure (quadrature, propagation, truncation
// search) fails to reach its tolerance. The message carries the last error
// estimate so callers can decide whether to keep or discard the result.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}

  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

}  // namespace minact
