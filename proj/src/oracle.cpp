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

#include "mcmap/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mcmap {

namespace {

std::vector<Assignment> enumerate_assignments(std::size_t num_qubits,
                                              const Architecture &arch,
                                              std::size_t max_states) {
  std::vector<Assignment> out;
  std::vector<Core> digits(num_qubits, 0);
  std::vector<std::size_t> load(arch.num_cores(), 0);
  // Depth-first over qubits, pruning on capacity.
  auto recurse = [&](auto &&self, std::size_t q) -> void {
    if (q == num_qubits) {
      if (out.size() == max_states) {
        throw std::invalid_argument("assignment space too large for the oracle");
      }
      out.emplace_back(digits);
      return;
    }
    for (Core c = 0; c < arch.num_cores(); ++c) {
      if (load[c] == arch.capacity(c)) continue;
      ++load[c];
      digits[q] = c;
      self(self, q + 1);
      --load[c];
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace

std::optional<std::size_t> optimal_communications(
    const TimeslicedCircuit &slices, const Architecture &arch,
    std::size_t max_states) {
  if (slices.num_qubits() > arch.total_capacity()) {
    throw CapacityError("circuit does not fit the architecture");
  }
  if (slices.num_slices() == 0) return 0;
  const auto states =
      enumerate_assignments(slices.num_qubits(), arch, max_states);
  const std::size_t s = states.size();

  constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best(s, kUnreachable), next(s);
  for (std::size_t i = 0; i < s; ++i) {
    if (is_valid(states[i], slices.slice(0), arch)) best[i] = 0;
  }
  for (std::size_t m = 1; m < slices.num_slices(); ++m) {
    std::fill(next.begin(), next.end(), kUnreachable);
    for (std::size_t j = 0; j < s; ++j) {
      if (!is_valid(states[j], slices.slice(m), arch)) continue;
      for (std::size_t i = 0; i < s; ++i) {
        if (best[i] == kUnreachable) continue;
        next[j] = std::min(next[j], best[i] + relocations(states[i], states[j]));
      }
    }
    best.swap(next);
  }
  const std::size_t answer = *std::min_element(best.begin(), best.end());
  if (answer == kUnreachable) return std::nullopt;
  return answer;
}

}  // namespace mcmap
