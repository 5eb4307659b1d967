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
#include <optional>

#include "mcmap/circuit.hpp"
#include "mcmap/partition.hpp"

namespace mcmap {

/** Default bound on the number of capacity-respecting assignments. */
inline constexpr std::size_t kOracleMaxStates = 4096;

/**
 * Minimum communications over every valid assignment path, by dynamic
 * programming over all capacity-respecting assignments. The first slice's
 * assignment is free, as in count_communications. nullopt when some slice
 * has no valid assignment at all.
 *
 * Only meant for tiny instances: throws std::invalid_argument when the
 * assignment space exceeds max_states.
 */
std::optional<std::size_t> optimal_communications(
    const TimeslicedCircuit &slices, const Architecture &arch,
    std::size_t max_states = kOracleMaxStates);

}  // namespace mcmap
