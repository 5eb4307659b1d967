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
#include <span>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "mcmap/circuit.hpp"

namespace mcmap {

using Core = std::uint32_t;

/** Raised when a circuit cannot be placed on an architecture at all. */
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * N cores with all-to-all connectivity inside and between them. Capacities
 * may differ per core, though every mapper entry point in this project
 * builds uniform ones.
 */
class Architecture {
 public:
  Architecture(std::size_t num_cores, std::size_t capacity);
  explicit Architecture(std::vector<std::size_t> capacities);

  std::size_t num_cores() const { return capacities_.size(); }
  std::size_t capacity(Core core) const { return capacities_.at(core); }
  const std::vector<std::size_t> &capacities() const { return capacities_; }
  std::size_t total_capacity() const;
  /** The shared capacity, or nullopt when cores differ. */
  std::optional<std::size_t> uniform_capacity() const;

  bool operator==(const Architecture &other) const = default;

 private:
  std::vector<std::size_t> capacities_;
};

/** Total map from qubit to core. */
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<Core> core_of) : core_of_(std::move(core_of)) {}

  std::size_t num_qubits() const { return core_of_.size(); }
  Core core_of(Qubit q) const { return core_of_[q]; }
  void set(Qubit q, Core core) { core_of_[q] = core; }
  const std::vector<Core> &cores() const { return core_of_; }

  std::vector<std::size_t> loads(std::size_t num_cores) const;

  bool operator==(const Assignment &other) const = default;

 private:
  std::vector<Core> core_of_;
};

/** One assignment per timeslice; the output of every mapper. */
struct AssignmentPath {
  std::size_t num_qubits = 0;
  Architecture arch{1, 1};
  std::vector<Assignment> slices;
};

/** Block layout: qubits fill core 0 first, then core 1, and so on. */
Assignment initial_assignment(std::size_t num_qubits, const Architecture &arch);

bool respects_capacity(const Assignment &assignment, const Architecture &arch);

/** Every two-qubit gate of the slice is core-local and no core overflows. */
bool is_valid(const Assignment &assignment, const Timeslice &slice,
              const Architecture &arch);

/** First slice whose assignment is invalid, or nullopt if all are valid. */
std::optional<std::size_t> first_invalid_slice(const AssignmentPath &path,
                                               const TimeslicedCircuit &slices);

/** Number of qubits whose core differs between the two assignments. */
std::size_t relocations(const Assignment &from, const Assignment &to);

/**
 * Inter-core communications along a path: one per qubit relocation between
 * consecutive slices. The first assignment is free.
 */
std::size_t count_communications(std::span<const Assignment> path);
inline std::size_t count_communications(const AssignmentPath &path) {
  return count_communications(std::span<const Assignment>(path.slices));
}

void to_json(nlohmann::json &j, const AssignmentPath &path);
void from_json(const nlohmann::json &j, AssignmentPath &path);

}  // namespace mcmap
