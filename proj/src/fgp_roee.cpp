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

#include "mcmap/fgp_roee.hpp"

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace mcmap {

Partition::Partition(std::vector<Core> part_of, std::size_t num_real,
                     std::size_t num_parts, std::size_t part_size)
    : part_of_(std::move(part_of)),
      num_real_(num_real),
      num_parts_(num_parts),
      part_size_(part_size) {
  if (num_real_ > part_of_.size()) {
    throw std::invalid_argument("partition has fewer vertices than qubits");
  }
  if (!balanced()) throw std::invalid_argument("partition is not balanced");
}

Partition Partition::from_assignment(const Assignment &assignment,
                                     const Architecture &arch) {
  const auto cap = arch.uniform_capacity();
  if (!cap) {
    throw std::invalid_argument("partitioning needs uniform core capacity");
  }
  auto part_of = assignment.cores();
  const auto load = assignment.loads(arch.num_cores());
  for (Core c = 0; c < arch.num_cores(); ++c) {
    if (load[c] > *cap) throw CapacityError("core over capacity");
    part_of.insert(part_of.end(), *cap - load[c], c);
  }
  return Partition(std::move(part_of), assignment.num_qubits(),
                   arch.num_cores(), *cap);
}

bool Partition::balanced() const {
  std::vector<std::size_t> size(num_parts_, 0);
  for (Core p : part_of_) {
    if (p >= num_parts_) return false;
    ++size[p];
  }
  for (std::size_t s : size) {
    if (s != part_size_) return false;
  }
  return true;
}

Assignment Partition::to_assignment() const {
  return Assignment(
      std::vector<Core>(part_of_.begin(), part_of_.begin() + num_real_));
}

Weight cut_weight(const InteractionGraph &graph, const Partition &partition) {
  double total = 0.0;
  for (const auto &[pair, w] : graph.edges()) {
    if (partition.part_of(pair.first) == partition.part_of(pair.second)) {
      continue;
    }
    if (w.is_infinite()) return Weight::infinite();
    total += w.value();
  }
  return Weight::finite(total);
}

double infinite_substitute(const InteractionGraph &graph) {
  double total = 0.0;
  for (const auto &[pair, w] : graph.edges()) {
    if (!w.is_infinite()) total += w.value();
  }
  return total + 1.0;
}

double substituted_cut(const InteractionGraph &graph,
                       const Partition &partition) {
  const double big = infinite_substitute(graph);
  double total = 0.0;
  for (const auto &[pair, w] : graph.edges()) {
    if (partition.part_of(pair.first) != partition.part_of(pair.second)) {
      total += w.is_infinite() ? big : w.value();
    }
  }
  return total;
}

namespace {

constexpr double kGainEps = 1e-12;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Swap {
  std::size_t u;
  std::size_t v;
  double gain;
};

// Dense exchange bookkeeping: substituted edge weights and, per vertex, the
// total weight it has toward each part.
class ExchangeState {
 public:
  ExchangeState(const InteractionGraph &graph, Partition partition)
      : part_(std::move(partition)),
        n_(part_.num_vertices()),
        k_(part_.num_parts()),
        w_(n_ * n_, 0.0),
        ext_(n_ * k_, 0.0),
        inf_partner_(n_, kNone),
        locked_(n_, 0) {
    const double big = infinite_substitute(graph);
    for (const auto &[pair, w] : graph.edges()) {
      const double x = w.is_infinite() ? big : w.value();
      w_[pair.first * n_ + pair.second] = x;
      w_[pair.second * n_ + pair.first] = x;
      if (w.is_infinite()) {
        inf_partner_[pair.first] = pair.second;
        inf_partner_[pair.second] = pair.first;
      }
    }
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        ext_[x * k_ + part_.part_of(y)] += w_[x * n_ + y];
      }
      if (inf_partner_[x] != kNone && x < inf_partner_[x] &&
          part_.part_of(x) != part_.part_of(inf_partner_[x])) {
        ++cut_infinite_;
      }
    }
  }

  const Partition &partition() const { return part_; }
  std::size_t cut_infinite() const { return cut_infinite_; }

  double gain(std::size_t u, std::size_t v) const {
    const Core pu = part_.part_of(u);
    const Core pv = part_.part_of(v);
    return ext_[u * k_ + pv] - ext_[u * k_ + pu] + ext_[v * k_ + pu] -
           ext_[v * k_ + pv] - 2.0 * w_[u * n_ + v];
  }

  void unlock_all() { std::fill(locked_.begin(), locked_.end(), 0); }

  // Best unlocked cross-part pair; ties keep the first in (u, v) order.
  std::optional<Swap> best_swap() const {
    std::optional<Swap> best;
    const std::size_t real = part_.num_real();
    for (std::size_t u = 0; u < n_; ++u) {
      if (locked_[u]) continue;
      for (std::size_t v = u + 1; v < n_; ++v) {
        if (locked_[v] || part_.part_of(u) == part_.part_of(v)) continue;
        if (u >= real && v >= real) continue;  // dummies are interchangeable
        const double g = gain(u, v);
        if (!best || g > best->gain) best = Swap{u, v, g};
      }
    }
    return best;
  }

  void apply(std::size_t u, std::size_t v) {
    const Core pu = part_.part_of(u);
    const Core pv = part_.part_of(v);
    cut_infinite_ -= cut_infinite_at(u) + cut_infinite_at(v, u);
    for (std::size_t x = 0; x < n_; ++x) {
      const double wu = w_[x * n_ + u];
      const double wv = w_[x * n_ + v];
      ext_[x * k_ + pu] += wv - wu;
      ext_[x * k_ + pv] += wu - wv;
    }
    part_.swap(u, v);
    cut_infinite_ += cut_infinite_at(u) + cut_infinite_at(v, u);
  }

  void lock(std::size_t v) { locked_[v] = 1; }

 private:
  // 1 if x's infinite edge is cut; the edge to `skip` is left to the caller
  // so a u-v edge is not counted twice.
  std::size_t cut_infinite_at(std::size_t x, std::size_t skip = kNone) const {
    const std::size_t p = inf_partner_[x];
    if (p == kNone || p == skip) return 0;
    return part_.part_of(x) != part_.part_of(p) ? 1 : 0;
  }

  Partition part_;
  std::size_t n_;
  std::size_t k_;
  std::vector<double> w_;
  std::vector<double> ext_;
  std::vector<std::size_t> inf_partner_;
  std::vector<char> locked_;
  std::size_t cut_infinite_ = 0;
};

bool has_cut_infinite(const InteractionGraph &graph,
                      const Partition &partition) {
  for (const auto &[pair, w] : graph.edges()) {
    if (w.is_infinite() &&
        partition.part_of(pair.first) != partition.part_of(pair.second)) {
      return true;
    }
  }
  return false;
}

void check_graph(const InteractionGraph &graph, const Partition &partition) {
  if (graph.num_qubits() > partition.num_real()) {
    throw std::invalid_argument("graph has more qubits than the partition");
  }
}

}  // namespace

Partition oee_refine(const InteractionGraph &graph, Partition initial) {
  check_graph(graph, initial);
  if (graph.edges().empty()) return initial;
  ExchangeState state(graph, std::move(initial));
  const std::size_t max_passes = 4 * state.partition().num_vertices() + 4;
  for (std::size_t pass = 0; pass < max_passes; ++pass) {
    state.unlock_all();
    std::vector<Swap> swaps;
    double cumulative = 0.0, best_total = 0.0;
    std::size_t best_prefix = 0;
    while (auto s = state.best_swap()) {
      state.apply(s->u, s->v);
      state.lock(s->u);
      state.lock(s->v);
      swaps.push_back(*s);
      cumulative += s->gain;
      if (cumulative > best_total + kGainEps) {
        best_total = cumulative;
        best_prefix = swaps.size();
      }
    }
    // Roll back everything after the best prefix.
    for (std::size_t i = swaps.size(); i > best_prefix; --i) {
      state.apply(swaps[i - 1].u, swaps[i - 1].v);
    }
    if (best_prefix == 0) break;
  }
  return state.partition();
}

Partition roee_refine(const InteractionGraph &graph, Partition initial,
                      const RoeeOptions &options) {
  check_graph(graph, initial);
  if (!has_cut_infinite(graph, initial)) {
    return options.continue_after_valid ? oee_refine(graph, std::move(initial))
                                        : initial;
  }
  ExchangeState state(graph, std::move(initial));
  const std::size_t cap = options.pass_cap
                              ? options.pass_cap
                              : 2 * state.partition().num_vertices();
  for (std::size_t pass = 0; pass < cap; ++pass) {
    state.unlock_all();
    while (auto s = state.best_swap()) {
      state.apply(s->u, s->v);
      state.lock(s->u);
      state.lock(s->v);
      if (state.cut_infinite() == 0) {
        return options.continue_after_valid
                   ? oee_refine(graph, state.partition())
                   : state.partition();
      }
    }
  }
  throw ValidityUnreachable("no valid partition after " +
                            std::to_string(cap) + " exchange passes");
}

AssignmentPath fgp_map(const TimeslicedCircuit &slices,
                       const Architecture &arch, const FgpConfig &config) {
  AssignmentPath path;
  path.num_qubits = slices.num_qubits();
  path.arch = arch;
  Assignment current = initial_assignment(slices.num_qubits(), arch);
  for (std::size_t m = 0; m < slices.num_slices(); ++m) {
    const InteractionGraph graph =
        build_interaction_graph(slices, m, config.horizon);
    Partition part = roee_refine(
        graph, Partition::from_assignment(current, arch), config.roee);
    current = part.to_assignment();
    path.slices.push_back(current);
  }
  return path;
}

AssignmentPath fgp_map(const Circuit &circuit, const Architecture &arch,
                       const FgpConfig &config) {
  return fgp_map(timeslice(circuit), arch, config);
}

}  // namespace mcmap
