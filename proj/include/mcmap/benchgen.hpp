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
#include <string>
#include <string_view>

#include "mcmap/circuit.hpp"

namespace mcmap {

enum class Family { Ghz, Cuccaro, Qft, QuantumVolume, Grover, Random };

std::string_view family_name(Family family);
/** Inverse of family_name; nullopt for unknown names. */
std::optional<Family> parse_family(std::string_view name);
bool is_stochastic(Family family);

/**
 * Everything needed to regenerate a benchmark circuit. num_qubits is the
 * total width; for the adder that is 2 * bits + 2.
 */
struct BenchmarkSpec {
  Family family = Family::Ghz;
  std::size_t num_qubits = 2;
  std::size_t depth = 20;       // quantum volume layers / random cycles
  double density = 0.5;         // random two-qubit density
  std::size_t iterations = 1;   // grover
  std::uint64_t seed = 0;

  /** Short label such as "random(p=0.3;cycles=20)"; never contains a comma. */
  std::string label() const;
};

Circuit generate(const BenchmarkSpec &spec);

/** h(0) then cx(0, i) for i = 1..n-1. */
Circuit gen_ghz(std::size_t n);

/** Textbook QFT with controlled phases and a final swap network. */
Circuit gen_qft(std::size_t n);

/**
 * Ripple-carry adder on 2 * bits + 2 qubits, a/b bits interleaved
 * (a0, b0, a1, b1, ...) followed by the carry-in and carry-out ancillas.
 * Toffolis are expanded into the usual 6-CX network.
 */
Circuit gen_cuccaro(std::size_t bits);

Circuit gen_quantum_volume(std::size_t n, std::size_t depth,
                           std::uint64_t seed);

/**
 * Grover skeleton. The multi-controlled Z of the oracle and of the
 * diffusion step is a CX ladder up, z on the last qubit, and the ladder back
 * down. This reproduces the interaction structure, not the unitary.
 */
Circuit gen_grover(std::size_t n, std::size_t iterations);

/**
 * Each cycle pairs 2 * floor(p * n / 2) shuffled qubits with cx and gives
 * every other qubit a random one-qubit gate.
 */
Circuit gen_random(std::size_t n, std::size_t cycles, double p,
                   std::uint64_t seed);

}  // namespace mcmap
