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
#include <iosfwd>
#include <string>

#include "minact/action.hpp"
#include "minact/ramp.hpp"

namespace minact {

/// Two-column CSV with header `s,g`, `points` equally spaced samples.
void write_profile_csv(const RampProfile& ramp, std::size_t points, std::ostream& out);

/// Reads a `g,gap` CSV (header required, g strictly increasing) into a
/// linearly interpolated action model with constant weight.
ActionModel read_gap_table(std::istream& in, double weight = 1.0);

/// %.12g formatting used by every CSV writer.
std::string format_number(double value);

}  // namespace minact
