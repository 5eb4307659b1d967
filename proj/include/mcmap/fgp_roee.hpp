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
#include <vector>

#include "mcmap/circuit.hpp"
#include "mcmap/hqa.hpp"
#include "mcmap/lookahead.hpp"
#include "mcmap/partition.hpp"

namespace mcmap {

/**
 * Balanced k-way partition over the qubits plus inert dummy vertices that
 * pad the architecture to N * c slots. Vertex ids below num_real() are
 * qubits; the rest are dummies.
 */
class Partition {
 public:
  Partition(std::vector<Core> part_of, std::size_t num_real,
            std::size_t num_parts, std::size_t part_size);

  /** Pads `assignment` with dummies filling each core's empty slots. */
  static Partition from_assignment(const Assignment &assignment,
                                   const Architecture &arch);

  std::size_t num_vertices() const { return part_of_.size(); }
  std::size_t num_real() const { return num_real_; }
  std::size_t num_parts() const { return num_parts_; }
  std::size_t part_size() const { return part_size_; }
  Core part_of(std::size_t v) const { return part_of_[v]; }
  const std::vector<Core> &parts() const { return part_of_; }

  void swap(std::size_t u, std::size_t v) { std::swap(part_of_[u], part_of_[v]); }
  bool balanced() const;
  /** Drops the dummies. */
  Assignment to_assignment() const;

  bool operator==(const Partition &other) const = default;

 private:
  std::vector<Core> part_of_;
  std::size_t num_real_;
  std::size_t num_parts_;
  std::size_t part_size_;
};

/** Sum of cut edge weights; infinite as soon as one infinite edge is cut. */
Weight cut_weight(const InteractionGraph &graph, const Partition &partition);

/** Stand-in for the infinite weight inside gain arithmetic. */
double infinite_substitute(const InteractionGraph &graph);

/** Cut weight with infinite edges replaced by infinite_substitute(graph). */
double substituted_cut(const InteractionGraph &graph,
                       const Partition &partition);

class ValidityUnreachable : public MappingError {
 public:
  using MappingError::MappingError;
};

struct RoeeOptions {
  /** Keep refining for finite gain once no infinite edge is cut. */
  bool continue_after_valid = false;
  /** Passes before giving up; 0 means twice the vertex count. */
  std::size_t pass_cap = 0;
};

/**
 * Kernighan-Lin style pairwise exchange. Each pass greedily swaps the
 * best-gain unlocked pair across parts (ties go to the smallest (u, v)),
 * locks both, and finally keeps the prefix of swaps with the largest
 * cumulative gain. Passes repeat while that gain is positive.
 */
Partition oee_refine(const InteractionGraph &graph, Partition initial);

/**
 * Relaxed variant: same exchange machinery, but stops at the first
 * configuration with no infinite edge cut, whatever the finite gain.
 * Throws ValidityUnreachable after the pass cap.
 */
Partition roee_refine(const InteractionGraph &graph, Partition initial,
                      const RoeeOptions &options = {});

struct FgpConfig {
  std::size_t horizon = kDefaultHorizon;
  RoeeOptions roee;
};

/**
 * Fine-grained partitioning baseline: re-partitions the look-ahead
 * interaction graph of every slice starting from the previous slice's
 * assignment. Needs uniform core capacities.
 */
AssignmentPath fgp_map(const TimeslicedCircuit &slices,
                       const Architecture &arch, const FgpConfig &config = {});
AssignmentPath fgp_map(const Circuit &circuit, const Architecture &arch,
                       const FgpConfig &config = {});

}  // namespace mcmap
