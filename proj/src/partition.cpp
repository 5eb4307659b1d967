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

#include "mcmap/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace mcmap {

Architecture::Architecture(std::size_t num_cores, std::size_t capacity)
    : Architecture(std::vector<std::size_t>(num_cores, capacity)) {}

Architecture::Architecture(std::vector<std::size_t> capacities)
    : capacities_(std::move(capacities)) {
  if (capacities_.empty()) {
    throw std::invalid_argument("architecture needs at least one core");
  }
  for (std::size_t c : capacities_) {
    if (c == 0) throw std::invalid_argument("core capacity must be positive");
  }
}

std::size_t Architecture::total_capacity() const {
  return std::accumulate(capacities_.begin(), capacities_.end(),
                         std::size_t{0});
}

std::optional<std::size_t> Architecture::uniform_capacity() const {
  const std::size_t c = capacities_.front();
  for (std::size_t other : capacities_) {
    if (other != c) return std::nullopt;
  }
  return c;
}

std::vector<std::size_t> Assignment::loads(std::size_t num_cores) const {
  std::vector<std::size_t> load(num_cores, 0);
  for (Core c : core_of_) {
    if (c >= num_cores) throw std::out_of_range("assignment core out of range");
    ++load[c];
  }
  return load;
}

Assignment initial_assignment(std::size_t num_qubits,
                              const Architecture &arch) {
  if (num_qubits > arch.total_capacity()) {
    throw CapacityError(std::to_string(num_qubits) +
                        " qubits do not fit into a total capacity of " +
                        std::to_string(arch.total_capacity()));
  }
  std::vector<Core> core_of(num_qubits);
  Core core = 0;
  std::size_t used = 0;
  for (std::size_t q = 0; q < num_qubits; ++q) {
    while (used == arch.capacity(core)) {
      ++core;
      used = 0;
    }
    core_of[q] = core;
    ++used;
  }
  return Assignment(std::move(core_of));
}

bool respects_capacity(const Assignment &assignment,
                       const Architecture &arch) {
  std::vector<std::size_t> load(arch.num_cores(), 0);
  for (Core c : assignment.cores()) {
    if (c >= arch.num_cores()) return false;
    if (++load[c] > arch.capacity(c)) return false;
  }
  return true;
}

bool is_valid(const Assignment &assignment, const Timeslice &slice,
              const Architecture &arch) {
  if (!respects_capacity(assignment, arch)) return false;
  for (const Gate &g : slice) {
    if (!g.is_two_qubit()) continue;
    const Qubit a = g.qubits()[0];
    const Qubit b = g.qubits()[1];
    if (a >= assignment.num_qubits() || b >= assignment.num_qubits()) {
      return false;
    }
    if (assignment.core_of(a) != assignment.core_of(b)) return false;
  }
  return true;
}

std::optional<std::size_t> first_invalid_slice(
    const AssignmentPath &path, const TimeslicedCircuit &slices) {
  if (path.slices.size() != slices.num_slices()) return 0;
  for (std::size_t t = 0; t < slices.num_slices(); ++t) {
    if (path.slices[t].num_qubits() != slices.num_qubits() ||
        !is_valid(path.slices[t], slices.slice(t), path.arch)) {
      return t;
    }
  }
  return std::nullopt;
}

std::size_t relocations(const Assignment &from, const Assignment &to) {
  if (from.num_qubits() != to.num_qubits()) {
    throw std::invalid_argument("assignments cover different qubit counts");
  }
  std::size_t moved = 0;
  for (std::size_t q = 0; q < from.num_qubits(); ++q) {
    if (from.core_of(static_cast<Qubit>(q)) != to.core_of(static_cast<Qubit>(q))) {
      ++moved;
    }
  }
  return moved;
}

std::size_t count_communications(std::span<const Assignment> path) {
  std::size_t total = 0;
  for (std::size_t t = 1; t < path.size(); ++t) {
    total += relocations(path[t - 1], path[t]);
  }
  return total;
}

void to_json(nlohmann::json &j, const AssignmentPath &path) {
  auto slices = nlohmann::json::array();
  for (const Assignment &a : path.slices) slices.push_back(a.cores());
  j = nlohmann::json{{"num_qubits", path.num_qubits},
                     {"num_cores", path.arch.num_cores()}};
  if (auto c = path.arch.uniform_capacity()) {
    j["capacity"] = *c;
  } else {
    j["capacity"] = path.arch.capacities();
  }
  j["slices"] = std::move(slices);
}

void from_json(const nlohmann::json &j, AssignmentPath &path) {
  path.num_qubits = j.at("num_qubits").get<std::size_t>();
  const auto num_cores = j.at("num_cores").get<std::size_t>();
  const auto &cap = j.at("capacity");
  if (cap.is_array()) {
    path.arch = Architecture(cap.get<std::vector<std::size_t>>());
    if (path.arch.num_cores() != num_cores) {
      throw std::invalid_argument("capacity list does not match num_cores");
    }
  } else {
    path.arch = Architecture(num_cores, cap.get<std::size_t>());
  }
  path.slices.clear();
  for (const auto &s : j.at("slices")) {
    auto cores = s.get<std::vector<Core>>();
    if (cores.size() != path.num_qubits) {
      throw std::invalid_argument("slice assignment has wrong qubit count");
    }
    path.slices.emplace_back(std::move(cores));
  }
}

}  // namespace mcmap
