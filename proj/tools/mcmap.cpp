// Copyright 2026 The mcmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mcmap/benchgen.hpp"
#include "mcmap/harness.hpp"
#include "mcmap/hqa.hpp"
#include "mcmap/oracle.hpp"
#include "mcmap/qasm.hpp"

namespace {

using namespace mcmap;

constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  std::vector<std::string> benchmarks;
  std::string mapper = "both";
  std::string attraction = "on";
  std::size_t horizon = kDefaultHorizon;
  std::uint64_t seed = 1;
  std::size_t replicas = 5;
  std::size_t depth = 20;
  std::size_t iterations = 1;
  std::vector<double> densities = {0.3, 0.5, 0.8};
  std::string format = "csv";
  std::string out;
  std::string ratios;
  bool no_timing = false;
  bool continue_after_valid = false;
};

void add_common(CLI::App *cmd, CommonFlags &f, bool sweep) {
  cmd->add_option("--benchmarks", f.benchmarks,
                  "ghz, cuccaro, qft, quantum_volume, grover, random")
      ->delimiter(',');
  cmd->add_option("--horizon", f.horizon, "Look-ahead slices")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Base seed")->capture_default_str();
  cmd->add_option("--depth", f.depth, "Quantum volume layers, random cycles")
      ->capture_default_str();
  cmd->add_option("--iterations", f.iterations, "Grover iterations")
      ->capture_default_str();
  cmd->add_option("--out", f.out, "Output file (default stdout)");
  cmd->add_option("--mapper", f.mapper)
      ->check(CLI::IsMember({"hqa", "fgp-roee", "both"}))
      ->capture_default_str();
  cmd->add_option("--attraction", f.attraction)
      ->check(CLI::IsMember({"on", "off", "both"}))
      ->capture_default_str();
  cmd->add_flag("--continue-after-valid", f.continue_after_valid,
                "Keep refining FGP-rOEE partitions once valid");
  if (!sweep) return;
  cmd->add_option("--densities", f.densities, "Random circuit densities")
      ->delimiter(',');
  cmd->add_option("--replicas", f.replicas,
                  "Seeds per stochastic configuration")
      ->capture_default_str();
  cmd->add_option("--format", f.format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--ratios", f.ratios, "Also write the ratio table here");
  cmd->add_flag("--no-timing", f.no_timing, "Omit wall-clock times");
}

std::vector<Family> parse_families(const std::vector<std::string> &names) {
  std::vector<Family> out;
  for (const auto &n : names) {
    auto f = parse_family(n);
    if (!f) throw UsageError("unknown benchmark '" + n + "'");
    out.push_back(*f);
  }
  return out;
}

SweepOptions sweep_options(const CommonFlags &f) {
  SweepOptions o;
  if (!f.benchmarks.empty()) o.families = parse_families(f.benchmarks);
  o.densities = f.densities;
  o.depth = f.depth;
  o.iterations = f.iterations;
  o.seed = f.seed;
  o.replicas = f.replicas;
  o.horizon = f.horizon;
  o.mappers = f.mapper == "hqa"        ? MapperSelection::Hqa
              : f.mapper == "fgp-roee" ? MapperSelection::FgpRoee
                                       : MapperSelection::Both;
  o.attraction = f.attraction == "on"    ? AttractionSelection::On
                 : f.attraction == "off" ? AttractionSelection::Off
                                         : AttractionSelection::Both;
  o.continue_after_valid = f.continue_after_valid;
  return o;
}

std::vector<MapperConfig> mapper_configs(const CommonFlags &f) {
  std::vector<MapperConfig> out;
  if (f.mapper != "hqa") {
    out.push_back({MapperKind::FgpRoee, false, f.horizon,
                   f.continue_after_valid});
  }
  if (f.mapper != "fgp-roee") {
    if (f.attraction != "off") {
      out.push_back({MapperKind::Hqa, true, f.horizon, false});
    }
    if (f.attraction != "on") {
      out.push_back({MapperKind::Hqa, false, f.horizon, false});
    }
  }
  return out;
}

void write_output(const std::string &path, const std::string &text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file << text;
}

std::string read_file(const std::string &path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void emit_sweep(const SweepResult &result, const CommonFlags &f) {
  const bool timing = !f.no_timing;
  if (f.format == "json") {
    nlohmann::json doc = {{"records", records_json(result.records, timing)},
                          {"ratios", ratios_json(result.ratios)}};
    write_output(f.out, doc.dump(2) + "\n");
    if (!f.ratios.empty()) {
      write_output(f.ratios, ratios_json(result.ratios).dump(2) + "\n");
    }
    return;
  }
  write_output(f.out, records_csv(result.records, timing));
  if (!f.ratios.empty()) write_output(f.ratios, ratios_csv(result.ratios));
}

BenchmarkSpec single_spec(const CommonFlags &f, std::size_t qubits,
                          double density) {
  if (f.benchmarks.size() != 1) {
    throw UsageError("exactly one benchmark is required");
  }
  BenchmarkSpec spec;
  spec.family = parse_families(f.benchmarks).front();
  spec.num_qubits = qubits;
  spec.depth = f.depth;
  spec.density = density;
  spec.iterations = f.iterations;
  spec.seed = f.seed;
  return spec;
}

// Circuit from --input, or generated from --benchmarks.
Circuit load_circuit(const std::string &input, const CommonFlags &f,
                     std::size_t qubits, double density, std::string &name) {
  if (!input.empty()) {
    name = input;
    return parse_qasm(read_file(input));
  }
  if (qubits == 0) throw UsageError("--qubits is required without --input");
  const BenchmarkSpec spec = single_spec(f, qubits, density);
  name = spec.label();
  return generate(spec);
}

Architecture architecture_for(std::size_t qubits, std::size_t cores,
                              std::size_t capacity) {
  if (cores == 0) throw UsageError("--cores must be positive");
  if (capacity == 0) capacity = (qubits + cores - 1) / cores;
  return Architecture(cores, capacity);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Multi-core quantum circuit mapper and experiment harness"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::size_t qubits = 0;
  std::size_t cores = 0;
  std::size_t capacity = 0;
  double density = 0.5;
  std::string input;
  std::vector<std::size_t> qubit_list;
  std::vector<std::size_t> core_list;

  auto *gen = app.add_subcommand("generate", "Emit a benchmark as QASM");
  add_common(gen, flags, false);
  gen->add_option("--qubits", qubits)->required();
  gen->add_option("--density", density, "Random circuit density")
      ->capture_default_str();

  auto *map = app.add_subcommand(
      "map", "Map one circuit and print the assignment path with metrics");
  add_common(map, flags, false);
  map->add_option("input", input, "OpenQASM 2.0 file");
  map->add_option("--qubits", qubits, "Width when generating");
  map->add_option("--density", density)->capture_default_str();
  map->add_option("--cores", cores)->required();
  map->add_option("--capacity", capacity, "Per core (default ceil(q/N))");

  auto *oracle = app.add_subcommand(
      "oracle", "Exact minimum communications for a tiny instance");
  add_common(oracle, flags, false);
  oracle->add_option("input", input, "OpenQASM 2.0 file");
  oracle->add_option("--qubits", qubits, "Width when generating");
  oracle->add_option("--density", density)->capture_default_str();
  oracle->add_option("--cores", cores)->required();
  oracle->add_option("--capacity", capacity, "Per core (default ceil(q/N))");

  auto *cores_cmd = app.add_subcommand(
      "sweep-cores", "Fixed qubit count over several core counts");
  add_common(cores_cmd, flags, true);
  std::size_t fixed_qubits = 120;
  core_list = {2, 3, 4, 5, 6, 10, 12};
  cores_cmd->add_option("--qubits", fixed_qubits)->capture_default_str();
  cores_cmd->add_option("--cores", core_list)->delimiter(',');

  auto *qubits_cmd = app.add_subcommand(
      "sweep-qubits", "Fixed core count over several qubit counts");
  add_common(qubits_cmd, flags, true);
  std::size_t fixed_cores = 10;
  qubit_list = {40, 80, 120, 160, 200};
  qubits_cmd->add_option("--cores", fixed_cores)->capture_default_str();
  qubits_cmd->add_option("--qubits", qubit_list)->delimiter(',');

  auto *attr_cmd = app.add_subcommand(
      "sweep-attraction", "HQA with and without attraction");
  add_common(attr_cmd, flags, true);
  std::size_t fixed_capacity = 16;
  std::vector<std::size_t> attr_qubits = {32, 48, 64, 80, 96, 112};
  attr_cmd->add_option("--capacity", fixed_capacity)->capture_default_str();
  attr_cmd->add_option("--qubits", attr_qubits)->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      const BenchmarkSpec spec = single_spec(flags, qubits, density);
      write_output(flags.out, serialize_qasm(generate(spec)));
    } else if (map->parsed()) {
      std::string name;
      const Circuit circuit = load_circuit(input, flags, qubits, density, name);
      const Architecture arch =
          architecture_for(circuit.num_qubits(), cores, capacity);
      auto results = nlohmann::json::array();
      for (const MapperConfig &config : mapper_configs(flags)) {
        MappedCircuit mapped = map_and_validate(circuit, arch, config);
        mapped.record.benchmark = name;
        nlohmann::json j = records_json({mapped.record}, true).front();
        j["path"] = mapped.path;
        results.push_back(std::move(j));
      }
      write_output(flags.out, results.dump(2) + "\n");
    } else if (oracle->parsed()) {
      std::string name;
      const Circuit circuit = load_circuit(input, flags, qubits, density, name);
      const Architecture arch =
          architecture_for(circuit.num_qubits(), cores, capacity);
      const auto best = optimal_communications(timeslice(circuit), arch);
      nlohmann::json doc = {{"benchmark", name},
                            {"num_qubits", circuit.num_qubits()},
                            {"num_cores", arch.num_cores()}};
      doc["optimum"] = best ? nlohmann::json(*best) : nlohmann::json(nullptr);
      auto mappers = nlohmann::json::array();
      for (const MapperConfig &config : mapper_configs(flags)) {
        const RunRecord r = map_and_validate(circuit, arch, config).record;
        mappers.push_back({{"mapper", mapper_name(r.mapper)},
                           {"use_attraction", r.use_attraction},
                           {"communications", r.communications}});
      }
      doc["mappers"] = std::move(mappers);
      write_output(flags.out, doc.dump(2) + "\n");
    } else if (cores_cmd->parsed()) {
      emit_sweep(sweep_cores(fixed_qubits, core_list, sweep_options(flags)), flags);
    } else if (qubits_cmd->parsed()) {
      emit_sweep(sweep_qubits(fixed_cores, qubit_list, sweep_options(flags)),
                 flags);
    } else if (attr_cmd->parsed()) {
      if (flags.benchmarks.empty()) flags.benchmarks = {"cuccaro", "random"};
      emit_sweep(
          sweep_attraction(fixed_capacity, attr_qubits, sweep_options(flags)),
          flags);
    }
  } catch (const ValidationFailure &e) {
    std::cerr << "validation failure: " << e.what() << "\n";
    return kExitValidation;
  } catch (const MappingError &e) {
    std::cerr << "mapping failure: " << e.what() << "\n";
    return kExitValidation;
  } catch (const QasmError &e) {
    std::cerr << "qasm: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
