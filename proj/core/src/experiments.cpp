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

#include "minact/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "minact/dynamics.hpp"
#include "minact/errors.hpp"
#include "minact/io.hpp"
#include "minact/version.hpp"

namespace minact {

using nlohmann::json;

std::string_view to_string(Protocol protocol) {
  switch (protocol) {
    case Protocol::kLinear: return "linear";
    case Protocol::kAction: return "action";
    case Protocol::kGarbe: return "garbe";
  }
  return "unknown";
}

Protocol parse_protocol(std::string_view name) {
  if (name == "linear") return Protocol::kLinear;
  if (name == "action") return Protocol::kAction;
  if (name == "garbe") return Protocol::kGarbe;
  throw std::invalid_argument("unknown protocol '" + std::string(name) + "'");
}

std::vector<double> TauGrid::values() const {
  if (points == 0) throw std::invalid_argument("TauGrid: need at least one point");
  if (!(min > 0.0) || !(max >= min)) {
    throw std::invalid_argument("TauGrid: bounds must satisfy 0 < min <= max");
  }
  if (points > 1 && !(max > min)) {
    throw std::invalid_argument("TauGrid: multi-point grid needs max > min");
  }
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = min;
    return out;
  }
  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / last;
    out[i] = log_spaced ? std::exp(std::log(min) + t * (std::log(max) - std::log(min)))
                        : min + t * (max - min);
  }
  out.front() = min;
  out.back() = max;
  return out;
}

namespace {

bool close_to(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

bool is_fc(const ModelSystem& model) {
  return std::holds_alternative<FullyConnectedModel>(model);
}

}  // namespace

void SweepSpec::validate() const {
  if (protocols.empty()) throw std::invalid_argument("sweep: protocol list is empty");
  for (Protocol p : protocols) {
    if (p == Protocol::kGarbe && !is_fc(model)) {
      throw std::invalid_argument("sweep: garbe protocol requires the fc model");
    }
    if (std::count(protocols.begin(), protocols.end(), p) > 1) {
      throw std::invalid_argument("sweep: duplicate protocol");
    }
  }
  (void)grid.values();
  // Throws on endpoints the requested ramps cannot realize.
  for (Protocol p : protocols) (void)synthesize(p, model, g0, g_tau);
}

double default_start(const ModelSystem& model) {
  if (const auto* lz = std::get_if<LandauZener>(&model)) return -10.0 * lz->delta;
  if (std::holds_alternative<IsingChain>(model)) return 0.0;
  return 0.1;
}

double default_target(const ModelSystem& model, double g0) {
  if (std::holds_alternative<LandauZener>(model)) return -g0;
  if (std::holds_alternative<IsingChain>(model)) return 2.0 - g0;
  return 0.9;
}

TauGrid default_grid(const Timescales& scales, const ModelSystem& model) {
  TauGrid grid;
  grid.points = 60;
  grid.log_spaced = true;
  grid.min = 0.1 * scales.tau_a;
  grid.max = std::holds_alternative<IsingChain>(model) && scales.tau_l
                 ? 10.0 * *scales.tau_l
                 : 100.0 * scales.tau_a;
  return grid;
}

SweepSpec default_sweep_spec(const ModelSystem& model) {
  SweepSpec spec;
  spec.model = model;
  spec.g0 = default_start(model);
  spec.g_tau = default_target(model, spec.g0);
  spec.protocols = {Protocol::kLinear, Protocol::kAction};
  if (is_fc(model)) spec.protocols.push_back(Protocol::kGarbe);
  spec.grid = default_grid(timescales(model, std::max(spec.g0, spec.g_tau)), model);
  return spec;
}

RampProfile synthesize(Protocol protocol, const ModelSystem& model, double g0, double g_tau) {
  switch (protocol) {
    case Protocol::kLinear:
      return linear_ramp({g0, g_tau, 1.0});
    case Protocol::kGarbe:
      if (!is_fc(model)) throw std::invalid_argument("garbe ramp is only defined for fc");
      return garbe_ramp(g0, g_tau);
    case Protocol::kAction:
      break;
  }
  if (const auto* lz = std::get_if<LandauZener>(&model)) {
    if (!close_to(g_tau, -g0)) {
      throw std::invalid_argument("lz action ramp runs from g0 to -g0");
    }
    return lz_optimal_ramp(g0, lz->delta);
  }
  if (const auto* chain = std::get_if<IsingChain>(&model)) {
    if (!close_to(g_tau, 2.0 - g0)) {
      throw std::invalid_argument("ising action ramp runs from g0 to 2 - g0");
    }
    return ising_optimal_ramp(g0, chain->sites());
  }
  return fc_optimal_ramp(g0, g_tau);
}

ActionModel action_model_for(const ModelSystem& model) {
  if (const auto* lz = std::get_if<LandauZener>(&model)) return lz_action_model(lz->delta);
  if (const auto* chain = std::get_if<IsingChain>(&model)) {
    return ising_action_model(chain->sites(), chain->omega());
  }
  return fc_action_model(std::get<FullyConnectedModel>(model).omega());
}

SweepResult run_sweep(const SweepSpec& input) {
  input.validate();
  SweepResult result;
  result.spec = input;
  SweepSpec& spec = result.spec;
  if (const auto* fc = std::get_if<FullyConnectedModel>(&spec.model)) {
    spec.model = FullyConnectedModel::with_converged_truncation(
        fc->eta(), std::min(spec.g0, spec.g_tau), std::max(spec.g0, spec.g_tau),
        fc->omega(), fc->n_max());
  }
  result.timescales = timescales(spec.model, std::max(spec.g0, spec.g_tau));

  const std::vector<double> taus = spec.grid.values();
  const ActionModel action = action_model_for(spec.model);
  std::vector<RampProfile> ramps;
  std::vector<double> unit_action;
  for (Protocol p : spec.protocols) {
    ramps.push_back(synthesize(p, spec.model, spec.g0, spec.g_tau));
    unit_action.push_back(evaluate_action(action, ramps.back(), 1.0));
  }

  const std::size_t n_protocols = spec.protocols.size();
  const std::size_t n_tasks = taus.size() * n_protocols;
  result.rows.resize(n_tasks);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n_tasks; i = next++) {
      const std::size_t t = i / n_protocols;
      const std::size_t p = i % n_protocols;
      SweepRow& row = result.rows[i];
      row.tau = taus[t];
      row.protocol = spec.protocols[p];
      row.action = unit_action[p] / taus[t];
      try {
        const EvolutionResult evo = evolve(spec.model, ramps[p], taus[t]);
        row.fidelity = evo.fidelity;
        row.norm_drift = evo.norm_drift;
        row.steps = evo.steps;
        row.converged = evo.converged;
      } catch (const NumericalError&) {
        row.fidelity = std::numeric_limits<double>::quiet_NaN();
        row.norm_drift = std::numeric_limits<double>::quiet_NaN();
        row.converged = false;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  unsigned threads = spec.threads != 0 ? spec.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, n_tasks));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  result.partial = std::any_of(result.rows.begin(), result.rows.end(),
                               [](const SweepRow& r) { return !r.converged; });
  return result;
}

std::vector<SweepRow> rows_for(const SweepResult& result, Protocol protocol) {
  std::vector<SweepRow> out;
  for (const SweepRow& row : result.rows) {
    if (row.protocol == protocol) out.push_back(row);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const SweepRow& a, const SweepRow& b) { return a.tau < b.tau; });
  return out;
}

std::optional<double> threshold_time(const SweepResult& result, Protocol protocol,
                                     double f_min) {
  for (const SweepRow& row : rows_for(result, protocol)) {
    if (row.converged && row.fidelity >= f_min) return row.tau;
  }
  return std::nullopt;
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << "tau,protocol,fidelity,norm_drift,steps,action\n";
  for (const SweepRow& row : result.rows) {
    out << format_number(row.tau) << ',' << to_string(row.protocol) << ','
        << format_number(row.fidelity) << ',' << format_number(row.norm_drift) << ','
        << row.steps << ',' << format_number(row.action) << '\n';
  }
}

namespace {

json model_params(const ModelSystem& model) {
  if (const auto* lz = std::get_if<LandauZener>(&model)) return {{"delta", lz->delta}};
  if (const auto* chain = std::get_if<IsingChain>(&model)) {
    return {{"N", chain->sites()}, {"omega", chain->omega()}};
  }
  const auto& fc = std::get<FullyConnectedModel>(model);
  return {{"eta", fc.eta()}, {"omega", fc.omega()}, {"n_max", fc.n_max()}};
}

}  // namespace

std::string sweep_metadata_json(const SweepResult& result) {
  const SweepSpec& spec = result.spec;
  json protocols = json::array();
  for (Protocol p : spec.protocols) protocols.push_back(std::string(to_string(p)));
  json nonconverged = json::array();
  for (std::size_t i = 0; i < result.rows.size(); ++i) {
    if (!result.rows[i].converged) nonconverged.push_back(i);
  }
  json meta = {
      {"model", std::string(model_name(spec.model))},
      {"params", model_params(spec.model)},
      {"g0", spec.g0},
      {"g_tau", spec.g_tau},
      {"protocols", protocols},
      {"tau",
       {{"min", spec.grid.min},
        {"max", spec.grid.max},
        {"points", spec.grid.points},
        {"spacing", spec.grid.log_spaced ? "log" : "linear"}}},
      {"tau_a", result.timescales.tau_a},
      {"tau_l", result.timescales.tau_l ? json(*result.timescales.tau_l) : json(nullptr)},
      {"version", kVersion},
      {"partial", result.partial},
      {"nonconverged_rows", nonconverged},
  };
  return meta.dump(2) + "\n";
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
  std::filesystem::path out = csv_path;
  out.replace_extension(".json");
  return out;
}

void write_sweep(const SweepResult& result, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  {
    std::ofstream csv(path, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot open " + path.string());
    write_sweep_csv(result, csv);
  }
  std::ofstream meta(sidecar_path(path), std::ios::binary);
  if (!meta) throw std::runtime_error("cannot open " + sidecar_path(path).string());
  meta << sweep_metadata_json(result);
}

namespace {

ModelSystem model_from(const json& j) {
  if (!j.contains("model")) throw std::invalid_argument("config: missing \"model\"");
  const std::string name = j.at("model").get<std::string>();
  const double omega = j.value("omega", 1.0);
  if (name == "lz") {
    const double delta = j.value("delta", 1.0);
    if (!(delta > 0.0)) throw std::invalid_argument("config: delta must be positive");
    return LandauZener{delta};
  }
  if (name == "ising") {
    if (!j.contains("N")) throw std::invalid_argument("config: ising requires \"N\"");
    return IsingChain(j.at("N").get<int>(), omega);
  }
  if (name == "fc") {
    if (!j.contains("eta")) throw std::invalid_argument("config: fc requires \"eta\"");
    return FullyConnectedModel(j.at("eta").get<double>(), j.value("n_max", 160), omega);
  }
  throw std::invalid_argument("config: unknown model '" + name + "'");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
}

}  // namespace

ModelSystem parse_model(std::string_view json_text) {
  return model_from(parse_json(json_text));
}

SweepSpec parse_sweep_spec(std::string_view json_text) {
  const json j = parse_json(json_text);
  try {
    SweepSpec spec = default_sweep_spec(model_from(j));
    if (j.contains("g0")) {
      spec.g0 = j.at("g0").get<double>();
      spec.g_tau = default_target(spec.model, spec.g0);
    }
    if (j.contains("g_tau")) spec.g_tau = j.at("g_tau").get<double>();
    if (j.contains("protocols")) {
      spec.protocols.clear();
      for (const auto& p : j.at("protocols")) {
        spec.protocols.push_back(parse_protocol(p.get<std::string>()));
      }
    }
    spec.grid = default_grid(timescales(spec.model, std::max(spec.g0, spec.g_tau)), spec.model);
    if (j.contains("tau")) {
      const json& t = j.at("tau");
      spec.grid.min = t.value("min", spec.grid.min);
      spec.grid.max = t.value("max", spec.grid.max);
      spec.grid.points = t.value("points", spec.grid.points);
      const std::string spacing = t.value("spacing", std::string("log"));
      if (spacing != "log" && spacing != "linear") {
        throw std::invalid_argument("config: tau.spacing must be log or linear");
      }
      spec.grid.log_spaced = spacing == "log";
    }
    if (j.contains("output")) spec.output = j.at("output").get<std::string>();
    if (j.contains("threads")) spec.threads = j.at("threads").get<unsigned>();
    spec.validate();
    return spec;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
}

SweepSpec load_sweep_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read config " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_sweep_spec(buffer.str());
}

}  // namespace minact
