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

#include "minact/io.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace minact {

std::string format_number(double value) {
  char buffer[32];
  const int n = std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return std::string(buffer, static_cast<std::size_t>(n));
}

void write_profile_csv(const RampProfile& ramp, std::size_t points, std::ostream& out) {
  out << "s,g\n";
  for (const auto& [s, g] : ramp.tabulate(points)) {
    out << format_number(s) << ',' << format_number(g) << '\n';
  }
}

namespace {

double parse_field(std::string_view text, std::size_t line) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("gap table line " + std::to_string(line) +
                                ": not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

ActionModel read_gap_table(std::istream& in, double weight) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("gap table: empty input");
  std::vector<double> g;
  std::vector<double> gap;
  std::size_t number = 1;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line == "\r") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("gap table line " + std::to_string(number) +
                                  ": expected two columns");
    }
    const std::string_view view(line);
    g.push_back(parse_field(view.substr(0, comma), number));
    gap.push_back(parse_field(view.substr(comma + 1), number));
  }
  return tabulated_action_model(std::move(g), std::move(gap), weight);
}

}  // namespace minact
