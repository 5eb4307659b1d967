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

#include "mcmap/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcmap {

Gate::Gate(std::string label, std::vector<Qubit> qubits,
           std::vector<double> params)
    : label_(std::move(label)),
      qubits_(std::move(qubits)),
      params_(std::move(params)) {
  if (qubits_.size() == 1) {
    kind_ = GateKind::OneQubit;
  } else if (qubits_.size() == 2) {
    if (qubits_[0] == qubits_[1]) {
      throw std::invalid_argument(
          "gate '" + label_ + "' uses qubit " + std::to_string(qubits_[0]) +
          " twice");
    }
    kind_ = GateKind::TwoQubit;
  } else {
    throw std::invalid_argument(
        "gate '" + label_ + "' has " + std::to_string(qubits_.size()) +
        " qubits; only one- and two-qubit gates are supported");
  }
}

bool Gate::acts_on(Qubit q) const {
  return std::find(qubits_.begin(), qubits_.end(), q) != qubits_.end();
}

Circuit::Circuit(std::size_t num_qubits, std::vector<Gate> gates)
    : num_qubits_(num_qubits) {
  if (num_qubits_ == 0) {
    throw std::invalid_argument("circuit needs at least one qubit");
  }
  gates_.reserve(gates.size());
  for (auto &g : gates) add(std::move(g));
}

void Circuit::add(Gate gate) {
  for (Qubit q : gate.qubits()) {
    if (q >= num_qubits_) {
      throw std::out_of_range(
          "qubit " + std::to_string(q) + " out of range for a " +
          std::to_string(num_qubits_) + "-qubit circuit");
    }
  }
  gates_.push_back(std::move(gate));
}

std::size_t Circuit::count_two_qubit_gates() const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(),
                    [](const Gate &g) { return g.is_two_qubit(); }));
}

TimeslicedCircuit::TimeslicedCircuit(std::size_t num_qubits,
                                     std::vector<Timeslice> slices)
    : num_qubits_(num_qubits),
      slices_(std::move(slices)),
      partners_(slices_.size() * num_qubits, kNoPartner),
      busy_(slices_.size() * num_qubits, 0) {
  for (std::size_t m = 0; m < slices_.size(); ++m) {
    for (const Gate &g : slices_[m]) {
      for (Qubit q : g.qubits()) {
        if (q >= num_qubits_) {
          throw std::out_of_range("timeslice gate qubit out of range");
        }
        auto &flag = busy_[m * num_qubits_ + q];
        if (flag) {
          throw std::invalid_argument(
              "qubit " + std::to_string(q) + " used twice in slice " +
              std::to_string(m));
        }
        flag = 1;
      }
      if (g.is_two_qubit()) {
        const Qubit a = g.qubits()[0];
        const Qubit b = g.qubits()[1];
        partners_[m * num_qubits_ + a] = static_cast<std::int32_t>(b);
        partners_[m * num_qubits_ + b] = static_cast<std::int32_t>(a);
      }
    }
  }
}

TimeslicedCircuit timeslice(const Circuit &circuit) {
  // next_free[q] = first slice index where q is not yet used.
  std::vector<std::size_t> next_free(circuit.num_qubits(), 0);
  std::vector<Timeslice> slices;
  for (const Gate &g : circuit.gates()) {
    std::size_t layer = 0;
    for (Qubit q : g.qubits()) layer = std::max(layer, next_free[q]);
    if (layer == slices.size()) slices.emplace_back();
    slices[layer].push_back(g);
    for (Qubit q : g.qubits()) next_free[q] = layer + 1;
  }
  return TimeslicedCircuit(circuit.num_qubits(), std::move(slices));
}

std::vector<QubitPair> interacting_pairs(const Timeslice &slice) {
  std::vector<QubitPair> pairs;
  for (const Gate &g : slice) {
    if (g.is_two_qubit()) {
      pairs.push_back(make_pair_key(g.qubits()[0], g.qubits()[1]));
    }
  }
  return pairs;
}

}  // namespace mcmap
