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
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mcmap/circuit.hpp"
#include "mcmap/lookahead.hpp"
#include "mcmap/partition.hpp"

namespace mcmap {

/** A mapper could not produce a valid assignment. */
class MappingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OpOrigin { Gate, Auxiliary };

/** A two-qubit operation whose qubits must end up in one core. */
struct UnfeasibleOp {
  Qubit qa;
  Qubit qb;
  OpOrigin origin = OpOrigin::Gate;

  bool operator==(const UnfeasibleOp &other) const = default;
};

/** A single idle qubit sent straight to a core to fix its free-slot parity. */
struct PinnedMove {
  Qubit qubit;
  Core core;

  bool operator==(const PinnedMove &other) const = default;
};

/** What one HQA transition has to place. */
struct RepairPlan {
  std::vector<UnfeasibleOp> ops;
  /** Only needed for odd-capacity cores; empty in the even case. */
  std::vector<PinnedMove> pinned;
};

struct HqaConfig {
  bool use_attraction = true;
  std::size_t horizon = kDefaultHorizon;
  /**
   * Cost of relocating one qubit between two cores. Empty means the
   * all-to-all model where every move costs 1.
   */
  std::function<double(Core from, Core to)> relocation_cost;
};

/**
 * Per-qubit core during a transition; nullopt while the qubit is lifted out
 * of its core and waiting to be placed.
 */
using Residency = std::vector<std::optional<Core>>;

Residency residency_of(const Assignment &assignment);

/** Two-qubit gates of `next` whose qubits sit in different cores. */
std::vector<UnfeasibleOp> collect_unfeasible(const Assignment &prev,
                                             const Timeslice &next);

/**
 * Adds auxiliary operations so every core ends up with an even number of
 * free slots once the unfeasible qubits are lifted.
 *
 * Odd cores are paired in ascending order. Each pair contributes one
 * auxiliary op built from the lowest-index qubit of each core that is idle
 * in `next` (falling back to one that only runs one-qubit gates). Pairs are
 * fixed only while the free slots cannot hold every op, which in a fully
 * packed architecture means all of them. A core with nothing movable
 * receives a pinned single qubit instead.
 *
 * Throws MappingError if parity cannot be repaired at all.
 */
RepairPlan parity_fix(std::vector<UnfeasibleOp> ops, const Assignment &prev,
                      const Timeslice &next, const Architecture &arch);

/** Free slots per core once the plan's qubits have been lifted. */
std::vector<std::size_t> free_spaces_after_lift(const RepairPlan &plan,
                                                const Assignment &prev,
                                                const Architecture &arch);

/**
 * Communication cost of placing `op` on `core`: nullopt when fewer than two
 * slots are free, otherwise the number of its qubits not already there.
 */
std::optional<double> cost_basic(const UnfeasibleOp &op, Core core,
                                 const Assignment &prev,
                                 const std::vector<std::size_t> &free_spaces,
                                 const HqaConfig &config = {});

/**
 * Pull of qubit q toward `core`: the look-ahead weight from slice t to every
 * qubit currently resident there. Lifted qubits do not pull. t may be -1
 * when placing the first slice.
 */
double attraction_qubit(Qubit q, Core core, const Residency &residency,
                        const TimeslicedCircuit &slices, std::ptrdiff_t t,
                        std::size_t horizon = kDefaultHorizon);

/** Attraction of q to every core at once. */
std::vector<double> attraction_profile(Qubit q, std::size_t num_cores,
                                       const Residency &residency,
                                       const TimeslicedCircuit &slices,
                                       std::ptrdiff_t t, std::size_t horizon);

/** cost_basic minus the mean attraction of the op's two qubits. */
std::optional<double> cost_attraction(
    const UnfeasibleOp &op, Core core, const Assignment &prev,
    const std::vector<std::size_t> &free_spaces, double attraction_a,
    double attraction_b, const HqaConfig &config = {});

/**
 * Produces the assignment for slice t + 1 from the assignment `prev` of
 * slice t. Pass t = -1 to repair an initial layout against slice 0.
 */
Assignment hqa_step(const Assignment &prev, const TimeslicedCircuit &slices,
                    std::ptrdiff_t t, const Architecture &arch,
                    const HqaConfig &config = {});

AssignmentPath hqa_map(const TimeslicedCircuit &slices,
                       const Architecture &arch, const HqaConfig &config = {});
AssignmentPath hqa_map(const Circuit &circuit, const Architecture &arch,
                       const HqaConfig &config = {});

}  // namespace mcmap
