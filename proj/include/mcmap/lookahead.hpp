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

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "mcmap/circuit.hpp"

namespace mcmap {

inline constexpr std::size_t kDefaultHorizon = 32;

/** Edge weight: a finite nonnegative value or the infinite marker. */
class Weight {
 public:
  static Weight finite(double value);
  static Weight infinite() { return Weight(true, 0.0); }

  bool is_infinite() const { return infinite_; }
  /** The finite value; +inf for the infinite marker. */
  double value() const;

  bool operator==(const Weight &other) const = default;
  std::partial_ordering operator<=>(const Weight &other) const;

 private:
  Weight(bool infinite, double value) : infinite_(infinite), value_(value) {}

  bool infinite_;
  double value_;
};

/**
 * Qubit interaction graph for one slice. Pairs acting together in the slice
 * get the infinite marker, pairs that only meet later get their decayed
 * look-ahead weight, and absent pairs weigh zero.
 */
class InteractionGraph {
 public:
  explicit InteractionGraph(std::size_t num_qubits)
      : num_qubits_(num_qubits) {}

  std::size_t num_qubits() const { return num_qubits_; }
  const std::map<QubitPair, Weight> &edges() const { return edges_; }

  Weight weight(Qubit a, Qubit b) const;
  void set(Qubit a, Qubit b, Weight w);

 private:
  std::size_t num_qubits_;
  std::map<QubitPair, Weight> edges_;
};

/** 2^-(m - t) for m > t. */
inline double decay(std::ptrdiff_t m, std::ptrdiff_t t) {
  return std::ldexp(1.0, static_cast<int>(t - m));
}

/**
 * Calls fn(partner, weight) for every future two-qubit interaction of q in
 * slices after..after+horizon (exclusive of `after`, clipped to the
 * circuit). `after` may be -1 to look ahead from before the first slice.
 */
template <class Fn>
void for_each_future_partner(const TimeslicedCircuit &slices,
                             std::ptrdiff_t after, Qubit q,
                             std::size_t horizon, Fn &&fn) {
  const auto last = std::min<std::ptrdiff_t>(
      static_cast<std::ptrdiff_t>(slices.num_slices()) - 1,
      after + static_cast<std::ptrdiff_t>(horizon));
  for (std::ptrdiff_t m = after + 1; m <= last; ++m) {
    const auto p = slices.partner(static_cast<std::size_t>(m), q);
    if (p != TimeslicedCircuit::kNoPartner) {
      fn(static_cast<Qubit>(p), decay(m, after));
    }
  }
}

/** Sum of 2^-(m - t) over slices m in (t, t + horizon] where qi meets qj. */
double lookahead_weight(const TimeslicedCircuit &slices, std::size_t t,
                        Qubit qi, Qubit qj,
                        std::size_t horizon = kDefaultHorizon);

InteractionGraph build_interaction_graph(
    const TimeslicedCircuit &slices, std::size_t t,
    std::size_t horizon = kDefaultHorizon);

}  // namespace mcmap
