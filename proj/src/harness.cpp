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

#include "mcmap/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "mcmap/fgp_roee.hpp"
#include "mcmap/hqa.hpp"

namespace mcmap {

std::string_view mapper_name(MapperKind mapper) {
  return mapper == MapperKind::Hqa ? "hqa" : "fgp_roee";
}

MappedCircuit map_and_validate(const Circuit &circuit,
                               const Architecture &arch,
                               const MapperConfig &config) {
  const auto start = std::chrono::steady_clock::now();
  const TimeslicedCircuit slices = timeslice(circuit);
  AssignmentPath path;
  if (config.mapper == MapperKind::Hqa) {
    HqaConfig hqa;
    hqa.use_attraction = config.use_attraction;
    hqa.horizon = config.horizon;
    path = hqa_map(slices, arch, hqa);
  } else {
    FgpConfig fgp;
    fgp.horizon = config.horizon;
    fgp.roee.continue_after_valid = config.continue_after_valid;
    path = fgp_map(slices, arch, fgp);
  }
  const auto stop = std::chrono::steady_clock::now();

  if (auto bad = first_invalid_slice(path, slices)) {
    throw ValidationFailure(std::string(mapper_name(config.mapper)) +
                            " produced an invalid assignment at slice " +
                            std::to_string(*bad));
  }

  MappedCircuit out{std::move(path), {}};
  RunRecord &r = out.record;
  r.num_qubits = circuit.num_qubits();
  r.num_cores = arch.num_cores();
  r.capacity = arch.uniform_capacity().value_or(0);
  r.mapper = config.mapper;
  r.use_attraction =
      config.mapper == MapperKind::Hqa && config.use_attraction;
  r.num_slices = slices.num_slices();
  r.num_2q_gates = circuit.count_two_qubit_gates();
  r.communications = count_communications(out.path);
  r.wall_time_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  return out;
}

RunRecord run_single(const BenchmarkSpec &spec, const Architecture &arch,
                     const MapperConfig &config) {
  if (spec.num_qubits > arch.total_capacity()) {
    throw CapacityError(spec.label() + " on " +
                        std::to_string(spec.num_qubits) +
                        " qubits does not fit " +
                        std::to_string(arch.num_cores()) + " cores");
  }
  const Circuit circuit = generate(spec);
  try {
    RunRecord r = map_and_validate(circuit, arch, config).record;
    r.benchmark = spec.label();
    r.seed = spec.seed;
    return r;
  } catch (const ValidationFailure &e) {
    throw ValidationFailure(spec.label() + " (" +
                            std::to_string(spec.num_qubits) + " qubits, " +
                            std::to_string(arch.num_cores()) +
                            " cores): " + e.what());
  }
}

double RatioRow::ratio() const {
  if (denominator_median == 0.0) {
    return numerator_median == 0.0 ? std::numeric_limits<double>::quiet_NaN()
                                   : std::numeric_limits<double>::infinity();
  }
  return numerator_median / denominator_median;
}

std::vector<BenchmarkSpec> benchmark_templates(const SweepOptions &options) {
  std::vector<BenchmarkSpec> out;
  for (Family f : options.families) {
    BenchmarkSpec spec;
    spec.family = f;
    spec.depth = options.depth;
    spec.iterations = options.iterations;
    spec.seed = options.seed;
    if (f == Family::Random) {
      for (double p : options.densities) {
        spec.density = p;
        out.push_back(spec);
      }
    } else {
      out.push_back(spec);
    }
  }
  return out;
}

namespace {

struct Variant {
  std::string label;
  MapperConfig config;
};

struct Cell {
  std::size_t num_qubits;
  Architecture arch;
};

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n == 0) return std::numeric_limits<double>::quiet_NaN();
  return n % 2 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

std::vector<Variant> comparison_variants(const SweepOptions &options) {
  std::vector<Variant> v;
  const bool fgp = options.mappers != MapperSelection::Hqa;
  const bool hqa = options.mappers != MapperSelection::FgpRoee;
  if (fgp) {
    MapperConfig c{MapperKind::FgpRoee, false, options.horizon,
                   options.continue_after_valid};
    v.push_back({"fgp_roee", c});
  }
  if (hqa) {
    if (options.attraction != AttractionSelection::Off) {
      v.push_back({"hqa", {MapperKind::Hqa, true, options.horizon, false}});
    }
    if (options.attraction != AttractionSelection::On) {
      v.push_back(
          {"hqa_noattr", {MapperKind::Hqa, false, options.horizon, false}});
    }
  }
  return v;
}

// Runs every template x cell x variant x seed and the requested ratios,
// where each ratio is (numerator variant, denominator variant).
SweepResult run_grid(const std::vector<BenchmarkSpec> &templates,
                     const std::vector<Cell> &cells,
                     const std::vector<Variant> &variants,
                     const std::vector<std::pair<std::size_t, std::size_t>>
                         &ratio_pairs,
                     const SweepOptions &options) {
  SweepResult result;
  for (const BenchmarkSpec &tmpl : templates) {
    for (const Cell &cell : cells) {
      BenchmarkSpec spec = tmpl;
      spec.num_qubits = cell.num_qubits;
      const std::size_t seeds =
          is_stochastic(spec.family) ? std::max<std::size_t>(1, options.replicas)
                                     : 1;
      std::vector<std::vector<double>> comms(variants.size());
      for (std::size_t vi = 0; vi < variants.size(); ++vi) {
        for (std::size_t s = 0; s < seeds; ++s) {
          spec.seed = options.seed + s;
          RunRecord r = run_single(spec, cell.arch, variants[vi].config);
          comms[vi].push_back(static_cast<double>(r.communications));
          result.records.push_back(std::move(r));
        }
      }
      for (auto [num, den] : ratio_pairs) {
        RatioRow row;
        row.benchmark = spec.label();
        row.num_qubits = cell.num_qubits;
        row.num_cores = cell.arch.num_cores();
        row.capacity = cell.arch.uniform_capacity().value_or(0);
        row.numerator = variants[num].label;
        row.denominator = variants[den].label;
        row.numerator_median = median(comms[num]);
        row.denominator_median = median(comms[den]);
        result.ratios.push_back(std::move(row));
      }
    }
  }
  return result;
}

std::vector<std::pair<std::size_t, std::size_t>> fgp_over_hqa(
    const std::vector<Variant> &variants) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (variants.empty() || variants[0].config.mapper != MapperKind::FgpRoee) {
    return pairs;
  }
  for (std::size_t i = 1; i < variants.size(); ++i) pairs.emplace_back(0, i);
  return pairs;
}

void require(bool ok, const std::string &msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

SweepResult sweep_cores(std::size_t num_qubits,
                        const std::vector<std::size_t> &core_counts,
                        const SweepOptions &options) {
  require(!core_counts.empty(), "core list is empty");
  std::vector<Cell> cells;
  for (std::size_t n : core_counts) {
    require(n > 0 && num_qubits % n == 0,
            std::to_string(n) + " cores do not divide " +
                std::to_string(num_qubits) + " qubits");
    require((num_qubits / n) % 2 == 0,
            std::to_string(n) + " cores leave an odd " +
                std::to_string(num_qubits / n) + " qubits per core");
    cells.push_back({num_qubits, Architecture(n, num_qubits / n)});
  }
  const auto variants = comparison_variants(options);
  return run_grid(benchmark_templates(options), cells, variants,
                  fgp_over_hqa(variants), options);
}

SweepResult sweep_qubits(std::size_t num_cores,
                         const std::vector<std::size_t> &qubit_counts,
                         const SweepOptions &options) {
  require(num_cores > 0, "core count must be positive");
  require(!qubit_counts.empty(), "qubit list is empty");
  std::vector<Cell> cells;
  for (std::size_t q : qubit_counts) {
    require(q > 0 && q % num_cores == 0,
            std::to_string(q) + " qubits do not split over " +
                std::to_string(num_cores) + " cores");
    require((q / num_cores) % 2 == 0,
            std::to_string(q) + " qubits give an odd capacity of " +
                std::to_string(q / num_cores));
    cells.push_back({q, Architecture(num_cores, q / num_cores)});
  }
  const auto variants = comparison_variants(options);
  return run_grid(benchmark_templates(options), cells, variants,
                  fgp_over_hqa(variants), options);
}

SweepResult sweep_attraction(std::size_t capacity,
                             const std::vector<std::size_t> &qubit_counts,
                             const SweepOptions &options) {
  require(capacity > 0, "capacity must be positive");
  require(!qubit_counts.empty(), "qubit list is empty");
  std::vector<Cell> cells;
  for (std::size_t q : qubit_counts) {
    require(q > 0 && q % capacity == 0,
            std::to_string(q) + " qubits are not a multiple of capacity " +
                std::to_string(capacity));
    cells.push_back({q, Architecture(q / capacity, capacity)});
  }
  const std::vector<Variant> variants = {
      {"hqa_noattr", {MapperKind::Hqa, false, options.horizon, false}},
      {"hqa", {MapperKind::Hqa, true, options.horizon, false}}};
  return run_grid(benchmark_templates(options), cells, variants, {{0, 1}},
                  options);
}

std::string format_ratio(double ratio) {
  if (std::isnan(ratio)) return "nan";
  if (std::isinf(ratio)) return "inf";
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(6);
  out << ratio;
  return out.str();
}

namespace {

std::string format_ms(double ms) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(3);
  out << ms;
  return out.str();
}

std::string format_median(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace

std::string records_csv(const std::vector<RunRecord> &records, bool timing) {
  std::ostringstream out;
  out << "benchmark,num_qubits,num_cores,capacity,mapper,use_attraction,seed,"
         "num_slices,num_2q_gates,communications,wall_time_ms\n";
  for (const RunRecord &r : records) {
    out << r.benchmark << ',' << r.num_qubits << ',' << r.num_cores << ','
        << r.capacity << ',' << mapper_name(r.mapper) << ','
        << (r.use_attraction ? 1 : 0) << ',' << r.seed << ',' << r.num_slices
        << ',' << r.num_2q_gates << ',' << r.communications << ','
        << (timing ? format_ms(r.wall_time_ms) : "NA") << '\n';
  }
  return out.str();
}

std::string ratios_csv(const std::vector<RatioRow> &rows) {
  std::ostringstream out;
  out << "benchmark,num_qubits,num_cores,capacity,numerator,denominator,"
         "numerator_median,denominator_median,ratio\n";
  for (const RatioRow &r : rows) {
    out << r.benchmark << ',' << r.num_qubits << ',' << r.num_cores << ','
        << r.capacity << ',' << r.numerator << ',' << r.denominator << ','
        << format_median(r.numerator_median) << ','
        << format_median(r.denominator_median) << ','
        << format_ratio(r.ratio()) << '\n';
  }
  return out.str();
}

nlohmann::json records_json(const std::vector<RunRecord> &records,
                            bool timing) {
  auto arr = nlohmann::json::array();
  for (const RunRecord &r : records) {
    nlohmann::json j = {{"benchmark", r.benchmark},
                        {"num_qubits", r.num_qubits},
                        {"num_cores", r.num_cores},
                        {"capacity", r.capacity},
                        {"mapper", mapper_name(r.mapper)},
                        {"use_attraction", r.use_attraction},
                        {"seed", r.seed},
                        {"num_slices", r.num_slices},
                        {"num_2q_gates", r.num_2q_gates},
                        {"communications", r.communications}};
    j["wall_time_ms"] =
        timing ? nlohmann::json(r.wall_time_ms) : nlohmann::json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr;
}

nlohmann::json ratios_json(const std::vector<RatioRow> &rows) {
  auto arr = nlohmann::json::array();
  for (const RatioRow &r : rows) {
    arr.push_back({{"benchmark", r.benchmark},
                   {"num_qubits", r.num_qubits},
                   {"num_cores", r.num_cores},
                   {"capacity", r.capacity},
                   {"numerator", r.numerator},
                   {"denominator", r.denominator},
                   {"numerator_median", r.numerator_median},
                   {"denominator_median", r.denominator_median},
                   {"ratio", format_ratio(r.ratio())}});
  }
  return arr;
}

}  // namespace mcmap
