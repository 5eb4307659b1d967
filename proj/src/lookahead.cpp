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

#include "mcmap/lookahead.hpp"

#include <limits>
#include <stdexcept>

namespace mcmap {

Weight Weight::finite(double value) {
  if (!(value >= 0.0) || std::isinf(value)) {
    throw std::invalid_argument("finite weight must be a nonnegative number");
  }
  return Weight(false, value);
}

double Weight::value() const {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

std::partial_ordering Weight::operator<=>(const Weight &other) const {
  if (infinite_ || other.infinite_) {
    return infinite_ <=> other.infinite_;
  }
  return value_ <=> other.value_;
}

Weight InteractionGraph::weight(Qubit a, Qubit b) const {
  auto it = edges_.find(make_pair_key(a, b));
  return it == edges_.end() ? Weight::finite(0.0) : it->second;
}

void InteractionGraph::set(Qubit a, Qubit b, Weight w) {
  if (a == b) throw std::invalid_argument("interaction graph self-loop");
  if (a >= num_qubits_ || b >= num_qubits_) {
    throw std::out_of_range("interaction graph qubit out of range");
  }
  edges_.insert_or_assign(make_pair_key(a, b), w);
}

double lookahead_weight(const TimeslicedCircuit &slices, std::size_t t,
                        Qubit qi, Qubit qj, std::size_t horizon) {
  if (t >= slices.num_slices()) {
    throw std::out_of_range("lookahead slice index out of range");
  }
  if (qi == qj) throw std::invalid_argument("lookahead on identical qubits");
  double w = 0.0;
  for_each_future_partner(slices, static_cast<std::ptrdiff_t>(t), qi, horizon,
                          [&](Qubit p, double d) {
                            if (p == qj) w += d;
                          });
  return w;
}

InteractionGraph build_interaction_graph(const TimeslicedCircuit &slices,
                                         std::size_t t, std::size_t horizon) {
  if (t >= slices.num_slices()) {
    throw std::out_of_range("interaction graph slice index out of range");
  }
  InteractionGraph graph(slices.num_qubits());
  std::map<QubitPair, double> future;
  const auto last =
      std::min(slices.num_slices() - 1, t + horizon);
  for (std::size_t m = t + 1; m <= last; ++m) {
    const double d = decay(static_cast<std::ptrdiff_t>(m),
                           static_cast<std::ptrdiff_t>(t));
    for (const QubitPair &p : interacting_pairs(slices.slice(m))) {
      future[p] += d;
    }
  }
  for (const auto &[pair, w] : future) {
    graph.set(pair.first, pair.second, Weight::finite(w));
  }
  for (const QubitPair &p : interacting_pairs(slices.slice(t))) {
    graph.set(p.first, p.second, Weight::infinite());
  }
  return graph;
}

}  // namespace mcmap
