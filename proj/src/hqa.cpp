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

#include "mcmap/hqa.hpp"

#include <algorithm>
#include <string>

#include "mcmap/hungarian.hpp"

namespace mcmap {

namespace {

enum class Activity : unsigned char { Idle, OneQubit, TwoQubit };

std::vector<Activity> activity_in(const Timeslice &slice,
                                  std::size_t num_qubits) {
  std::vector<Activity> act(num_qubits, Activity::Idle);
  for (const Gate &g : slice) {
    for (Qubit q : g.qubits()) {
      act.at(q) = g.is_two_qubit() ? Activity::TwoQubit : Activity::OneQubit;
    }
  }
  return act;
}

double move_cost(const HqaConfig &config, Core from, Core to) {
  if (from == to) return 0.0;
  return config.relocation_cost ? config.relocation_cost(from, to) : 1.0;
}

std::size_t floor_half_sum(const std::vector<std::size_t> &free) {
  std::size_t total = 0;
  for (std::size_t f : free) total += f / 2;
  return total;
}

}  // namespace

Residency residency_of(const Assignment &assignment) {
  Residency r(assignment.num_qubits());
  for (std::size_t q = 0; q < r.size(); ++q) {
    r[q] = assignment.core_of(static_cast<Qubit>(q));
  }
  return r;
}

std::vector<UnfeasibleOp> collect_unfeasible(const Assignment &prev,
                                             const Timeslice &next) {
  std::vector<UnfeasibleOp> ops;
  for (const Gate &g : next) {
    if (!g.is_two_qubit()) continue;
    const Qubit a = g.qubits()[0];
    const Qubit b = g.qubits()[1];
    if (prev.core_of(a) != prev.core_of(b)) {
      ops.push_back({a, b, OpOrigin::Gate});
    }
  }
  return ops;
}

std::vector<std::size_t> free_spaces_after_lift(const RepairPlan &plan,
                                                const Assignment &prev,
                                                const Architecture &arch) {
  const auto load = prev.loads(arch.num_cores());
  std::vector<std::size_t> free(arch.num_cores());
  for (Core c = 0; c < arch.num_cores(); ++c) {
    if (load[c] > arch.capacity(c)) {
      throw MappingError("core " + std::to_string(c) + " is over capacity");
    }
    free[c] = arch.capacity(c) - load[c];
  }
  for (const UnfeasibleOp &op : plan.ops) {
    ++free[prev.core_of(op.qa)];
    ++free[prev.core_of(op.qb)];
  }
  for (const PinnedMove &m : plan.pinned) {
    ++free[prev.core_of(m.qubit)];
    if (free[m.core] == 0) {
      throw MappingError("pinned move into a full core");
    }
    --free[m.core];
  }
  return free;
}

RepairPlan parity_fix(std::vector<UnfeasibleOp> ops, const Assignment &prev,
                      const Timeslice &next, const Architecture &arch) {
  RepairPlan plan{std::move(ops), {}};
  if (plan.ops.empty()) return plan;

  const std::size_t n = prev.num_qubits();
  const auto activity = activity_in(next, n);
  std::vector<char> taken(n, 0);
  for (const UnfeasibleOp &op : plan.ops) {
    taken[op.qa] = 1;
    taken[op.qb] = 1;
  }

  // Lowest-index resident of `core` that can leave without breaking a
  // feasible gate: idle qubits first, then one-qubit-gate qubits.
  auto movable = [&](Core core) -> std::optional<Qubit> {
    for (Activity wanted : {Activity::Idle, Activity::OneQubit}) {
      for (Qubit q = 0; q < n; ++q) {
        if (!taken[q] && prev.core_of(q) == core && activity[q] == wanted) {
          return q;
        }
      }
    }
    return std::nullopt;
  };

  auto free = free_spaces_after_lift(plan, prev, arch);
  std::vector<Core> odd;
  for (Core c = 0; c < arch.num_cores(); ++c) {
    if (free[c] % 2 == 1) odd.push_back(c);
  }

  for (std::size_t k = 0; k + 1 < odd.size(); k += 2) {
    if (floor_half_sum(free) >= plan.ops.size()) break;
    const Core a = odd[k];
    const Core b = odd[k + 1];
    const auto qa = movable(a);
    if (qa) taken[*qa] = 1;
    const auto qb = movable(b);
    if (qb) taken[*qb] = 1;

    if (qa && qb) {
      plan.ops.push_back({*qa, *qb, OpOrigin::Auxiliary});
      ++free[a];
      ++free[b];
    } else if (qa || qb) {
      // Only one side has a spare qubit: send it to the other side.
      const Qubit q = qa ? *qa : *qb;
      const Core from = qa ? a : b;
      const Core to = qa ? b : a;
      plan.pinned.push_back({q, to});
      ++free[from];
      --free[to];
    } else {
      // Neither core can give anything up; borrow two spare qubits from the
      // lowest core that has them.
      bool donated = false;
      for (Core d = 0; d < arch.num_cores() && !donated; ++d) {
        if (d == a || d == b) continue;
        const auto q1 = movable(d);
        if (!q1) continue;
        taken[*q1] = 1;
        const auto q2 = movable(d);
        if (!q2) {
          taken[*q1] = 0;
          continue;
        }
        taken[*q2] = 1;
        plan.pinned.push_back({*q1, a});
        plan.pinned.push_back({*q2, b});
        free[d] += 2;
        --free[a];
        --free[b];
        donated = true;
      }
      if (!donated) {
        throw MappingError("cannot balance free slots between cores " +
                           std::to_string(a) + " and " + std::to_string(b));
      }
    }
  }
  if (floor_half_sum(free) < plan.ops.size()) {
    throw MappingError("free slots cannot hold every unfeasible operation");
  }
  return plan;
}

std::optional<double> cost_basic(const UnfeasibleOp &op, Core core,
                                 const Assignment &prev,
                                 const std::vector<std::size_t> &free_spaces,
                                 const HqaConfig &config) {
  if (free_spaces.at(core) < 2) return std::nullopt;
  return move_cost(config, prev.core_of(op.qa), core) +
         move_cost(config, prev.core_of(op.qb), core);
}

std::vector<double> attraction_profile(Qubit q, std::size_t num_cores,
                                       const Residency &residency,
                                       const TimeslicedCircuit &slices,
                                       std::ptrdiff_t t, std::size_t horizon) {
  std::vector<double> attr(num_cores, 0.0);
  for_each_future_partner(slices, t, q, horizon, [&](Qubit p, double w) {
    if (const auto &core = residency[p]) attr[*core] += w;
  });
  return attr;
}

double attraction_qubit(Qubit q, Core core, const Residency &residency,
                        const TimeslicedCircuit &slices, std::ptrdiff_t t,
                        std::size_t horizon) {
  double attr = 0.0;
  for_each_future_partner(slices, t, q, horizon, [&](Qubit p, double w) {
    if (residency[p] == core) attr += w;
  });
  return attr;
}

std::optional<double> cost_attraction(
    const UnfeasibleOp &op, Core core, const Assignment &prev,
    const std::vector<std::size_t> &free_spaces, double attraction_a,
    double attraction_b, const HqaConfig &config) {
  const auto base = cost_basic(op, core, prev, free_spaces, config);
  if (!base) return std::nullopt;
  return *base - (attraction_a + attraction_b) / 2.0;
}

Assignment hqa_step(const Assignment &prev, const TimeslicedCircuit &slices,
                    std::ptrdiff_t t, const Architecture &arch,
                    const HqaConfig &config) {
  if (t < -1 || t + 1 >= static_cast<std::ptrdiff_t>(slices.num_slices())) {
    throw std::out_of_range("hqa_step: no slice after t");
  }
  const Timeslice &next = slices.slice(static_cast<std::size_t>(t + 1));
  RepairPlan plan = parity_fix(collect_unfeasible(prev, next), prev, next,
                               arch);
  if (plan.ops.empty() && plan.pinned.empty()) return prev;

  auto free = free_spaces_after_lift(plan, prev, arch);
  Residency residency = residency_of(prev);
  for (const UnfeasibleOp &op : plan.ops) {
    residency[op.qa].reset();
    residency[op.qb].reset();
  }
  for (const PinnedMove &m : plan.pinned) residency[m.qubit] = m.core;

  const std::size_t num_cores = arch.num_cores();
  std::span<const UnfeasibleOp> remaining(plan.ops);
  while (!remaining.empty()) {
    const auto eligible = static_cast<std::size_t>(
        std::count_if(free.begin(), free.end(),
                      [](std::size_t f) { return f >= 2; }));
    if (eligible == 0) {
      throw MappingError("no core has room for the remaining operations");
    }
    const auto batch = remaining.first(std::min(remaining.size(), eligible));

    CostMatrix costs(batch.size(), num_cores);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const UnfeasibleOp &op = batch[i];
      std::vector<double> attr_a, attr_b;
      if (config.use_attraction) {
        attr_a = attraction_profile(op.qa, num_cores, residency, slices, t,
                                    config.horizon);
        attr_b = attraction_profile(op.qb, num_cores, residency, slices, t,
                                    config.horizon);
      }
      for (Core c = 0; c < num_cores; ++c) {
        const auto cost =
            config.use_attraction
                ? cost_attraction(op, c, prev, free, attr_a[c], attr_b[c],
                                  config)
                : cost_basic(op, c, prev, free, config);
        if (cost) {
          costs.set(i, c, *cost);
        } else {
          costs.forbid(i, c);
        }
      }
    }

    const AssignmentSolution solution = solve(costs);
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const auto core = static_cast<Core>(solution.col_of_row[i]);
      residency[batch[i].qa] = core;
      residency[batch[i].qb] = core;
      free[core] -= 2;
    }
    remaining = remaining.subspan(batch.size());
  }

  std::vector<Core> core_of(prev.num_qubits());
  for (std::size_t q = 0; q < core_of.size(); ++q) core_of[q] = *residency[q];
  return Assignment(std::move(core_of));
}

AssignmentPath hqa_map(const TimeslicedCircuit &slices,
                       const Architecture &arch, const HqaConfig &config) {
  AssignmentPath path;
  path.num_qubits = slices.num_qubits();
  path.arch = arch;
  Assignment current = initial_assignment(slices.num_qubits(), arch);
  for (std::size_t m = 0; m < slices.num_slices(); ++m) {
    current = hqa_step(current, slices, static_cast<std::ptrdiff_t>(m) - 1,
                       arch, config);
    path.slices.push_back(current);
  }
  return path;
}

AssignmentPath hqa_map(const Circuit &circuit, const Architecture &arch,
                       const HqaConfig &config) {
  return hqa_map(timeslice(circuit), arch, config);
}

}  // namespace mcmap
