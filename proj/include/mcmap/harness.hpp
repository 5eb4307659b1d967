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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mcmap/benchgen.hpp"
#include "mcmap/circuit.hpp"
#include "mcmap/lookahead.hpp"
#include "mcmap/partition.hpp"

namespace mcmap {

enum class MapperKind { Hqa, FgpRoee };

std::string_view mapper_name(MapperKind mapper);

/** A mapper produced an assignment that breaks a gate or a capacity. */
class ValidationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MapperConfig {
  MapperKind mapper = MapperKind::Hqa;
  bool use_attraction = true;  // HQA only
  std::size_t horizon = kDefaultHorizon;
  bool continue_after_valid = false;  // FGP-rOEE only
};

/** One mapped circuit; field order is the CSV column order. */
struct RunRecord {
  std::string benchmark;
  std::size_t num_qubits = 0;
  std::size_t num_cores = 0;
  std::size_t capacity = 0;
  MapperKind mapper = MapperKind::Hqa;
  bool use_attraction = false;
  std::uint64_t seed = 0;
  std::size_t num_slices = 0;
  std::size_t num_2q_gates = 0;
  std::size_t communications = 0;
  double wall_time_ms = 0.0;
};

struct MappedCircuit {
  AssignmentPath path;
  RunRecord record;
};

/**
 * Slices and maps a circuit, then checks every slice. Throws
 * ValidationFailure naming the first bad slice.
 */
MappedCircuit map_and_validate(const Circuit &circuit,
                               const Architecture &arch,
                               const MapperConfig &config);

/** Generates, maps, validates and counts one benchmark instance. */
RunRecord run_single(const BenchmarkSpec &spec, const Architecture &arch,
                     const MapperConfig &config);

enum class MapperSelection { Hqa, FgpRoee, Both };
enum class AttractionSelection { On, Off, Both };

struct SweepOptions {
  std::vector<Family> families = {Family::Ghz,           Family::Cuccaro,
                                  Family::Qft,           Family::QuantumVolume,
                                  Family::Grover,        Family::Random};
  std::vector<double> densities = {0.3, 0.5, 0.8};
  std::size_t depth = 20;
  std::size_t iterations = 1;
  std::uint64_t seed = 1;
  /** Seeds per configuration for the stochastic families. */
  std::size_t replicas = 5;
  std::size_t horizon = kDefaultHorizon;
  MapperSelection mappers = MapperSelection::Both;
  AttractionSelection attraction = AttractionSelection::On;
  bool continue_after_valid = false;
};

/**
 * Ratio of median communications between two mapper variants on one
 * benchmark and architecture. Greater than 1 means the denominator wins.
 */
struct RatioRow {
  std::string benchmark;
  std::size_t num_qubits = 0;
  std::size_t num_cores = 0;
  std::size_t capacity = 0;
  std::string numerator;
  std::string denominator;
  double numerator_median = 0.0;
  double denominator_median = 0.0;

  /** +inf for x/0 with x > 0 and NaN for 0/0. */
  double ratio() const;
};

struct SweepResult {
  std::vector<RunRecord> records;
  std::vector<RatioRow> ratios;
};

/** Expands families and densities into benchmark templates. */
std::vector<BenchmarkSpec> benchmark_templates(const SweepOptions &options);

/**
 * Fixed qubit count over several core counts. Each count must divide the
 * qubits with an even quotient. Ratio rows are fgp_roee over hqa.
 */
SweepResult sweep_cores(std::size_t num_qubits,
                        const std::vector<std::size_t> &core_counts,
                        const SweepOptions &options);

/** Fixed core count over several qubit counts, same evenness rule. */
SweepResult sweep_qubits(std::size_t num_cores,
                         const std::vector<std::size_t> &qubit_counts,
                         const SweepOptions &options);

/**
 * HQA with and without attraction at a fixed core capacity, using as many
 * cores as each qubit count needs. Ratio rows are off over on.
 */
SweepResult sweep_attraction(std::size_t capacity,
                             const std::vector<std::size_t> &qubit_counts,
                             const SweepOptions &options);

/** "inf", "nan" or the value with six decimals. */
std::string format_ratio(double ratio);

std::string records_csv(const std::vector<RunRecord> &records, bool timing);
std::string ratios_csv(const std::vector<RatioRow> &rows);
nlohmann::json records_json(const std::vector<RunRecord> &records,
                            bool timing);
nlohmann::json ratios_json(const std::vector<RatioRow> &rows);

}  // namespace mcmap
