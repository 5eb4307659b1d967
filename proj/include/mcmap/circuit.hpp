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
#include <string>
#include <utility>
#include <vector>

namespace mcmap {

using Qubit = std::uint32_t;

enum class GateKind { OneQubit, TwoQubit };

/**
 * A one- or two-qubit gate. Only the qubit indices and the arity matter for
 * mapping; label and params are carried along so circuits can be written
 * back out unchanged.
 */
class Gate {
 public:
  Gate(std::string label, std::vector<Qubit> qubits,
       std::vector<double> params = {});

  GateKind kind() const { return kind_; }
  bool is_two_qubit() const { return kind_ == GateKind::TwoQubit; }
  const std::string &label() const { return label_; }
  const std::vector<Qubit> &qubits() const { return qubits_; }
  const std::vector<double> &params() const { return params_; }

  bool acts_on(Qubit q) const;

  bool operator==(const Gate &other) const = default;

 private:
  GateKind kind_;
  std::string label_;
  std::vector<Qubit> qubits_;
  std::vector<double> params_;
};

class Circuit {
 public:
  explicit Circuit(std::size_t num_qubits, std::vector<Gate> gates = {});

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Gate> &gates() const { return gates_; }

  /** Appends a gate, checking its qubits against the register width. */
  void add(Gate gate);

  std::size_t count_two_qubit_gates() const;

  bool operator==(const Circuit &other) const = default;

 private:
  std::size_t num_qubits_;
  std::vector<Gate> gates_;
};

using Timeslice = std::vector<Gate>;

/** Unordered qubit pair, stored with first < second. */
using QubitPair = std::pair<Qubit, Qubit>;

inline QubitPair make_pair_key(Qubit a, Qubit b) {
  return a < b ? QubitPair{a, b} : QubitPair{b, a};
}

/**
 * Circuit split into layers of gates with pairwise-disjoint qubits.
 *
 * Besides the slices themselves this keeps a dense partner table:
 * partner(m, q) is the other qubit of q's two-qubit gate in slice m, or
 * kNoPartner. Look-ahead weights and the mappers query it heavily.
 */
class TimeslicedCircuit {
 public:
  static constexpr std::int32_t kNoPartner = -1;

  TimeslicedCircuit(std::size_t num_qubits, std::vector<Timeslice> slices);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t num_slices() const { return slices_.size(); }
  const std::vector<Timeslice> &slices() const { return slices_; }
  const Timeslice &slice(std::size_t m) const { return slices_.at(m); }

  std::int32_t partner(std::size_t m, Qubit q) const {
    return partners_[m * num_qubits_ + q];
  }
  /** True if q is touched by any gate (one- or two-qubit) in slice m. */
  bool busy(std::size_t m, Qubit q) const {
    return busy_[m * num_qubits_ + q] != 0;
  }

 private:
  std::size_t num_qubits_;
  std::vector<Timeslice> slices_;
  std::vector<std::int32_t> partners_;
  std::vector<std::uint8_t> busy_;
};

/**
 * Greedy ASAP layering: each gate lands in the slice right after the last
 * slice that touches any of its qubits.
 */
TimeslicedCircuit timeslice(const Circuit &circuit);

/** One normalized pair per two-qubit gate, in gate order. */
std::vector<QubitPair> interacting_pairs(const Timeslice &slice);

}  // namespace mcmap
