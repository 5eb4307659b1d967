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

#include <gtest/gtest.h>

#include "mcmap/benchgen.hpp"
#include "mcmap/hqa.hpp"
#include "mcmap/oracle.hpp"

namespace mcmap {
namespace {

Gate cx(Qubit a, Qubit b) { return Gate("cx", {a, b}); }
Gate h(Qubit a) { return Gate("h", {a}); }

const Assignment kBlock({0, 0, 1, 1});

TEST(CollectUnfeasible, SplitPairsInGateOrder) {
  EXPECT_EQ(collect_unfeasible(kBlock, {cx(1, 2)}),
            (std::vector<UnfeasibleOp>{{1, 2, OpOrigin::Gate}}));
  EXPECT_TRUE(collect_unfeasible(kBlock, {cx(0, 1)}).empty());
}

TEST(CollectUnfeasible, FiveSplitPairs) {
  // Ten qubits alternating between two cores; every gate straddles them.
  const Assignment prev({0, 1, 0, 1, 0, 1, 0, 1, 0, 1});
  const Timeslice slice = {cx(0, 1), cx(2, 3), cx(4, 5), cx(6, 7), cx(8, 9)};
  EXPECT_EQ(collect_unfeasible(prev, slice).size(), 5u);
}

TEST(ParityFix, PairsIdleQubitsOfOddCores) {
  const Timeslice slice = {cx(1, 2)};
  const RepairPlan plan = parity_fix(collect_unfeasible(kBlock, slice), kBlock,
                                     slice, Architecture(2, 2));
  EXPECT_EQ(plan.ops, (std::vector<UnfeasibleOp>{
                          {1, 2, OpOrigin::Gate}, {0, 3, OpOrigin::Auxiliary}}));
  EXPECT_TRUE(plan.pinned.empty());
}

TEST(ParityFix, EvenCoresUnchanged) {
  const Assignment prev({0, 1, 0, 1});
  const Timeslice slice = {cx(0, 1), cx(2, 3)};
  const auto ops = collect_unfeasible(prev, slice);
  const RepairPlan plan = parity_fix(ops, prev, slice, Architecture(2, 2));
  EXPECT_EQ(plan.ops, ops);
}

TEST(ParityFix, PrefersIdleOverOneQubitGates) {
  const Assignment prev({0, 0, 0, 0, 1, 1, 1, 1});
  const Timeslice slice = {h(0), cx(3, 4), h(5)};
  const RepairPlan plan = parity_fix(collect_unfeasible(prev, slice), prev,
                                     slice, Architecture(2, 4));
  ASSERT_EQ(plan.ops.size(), 2u);
  EXPECT_EQ(plan.ops[1], (UnfeasibleOp{1, 6, OpOrigin::Auxiliary}));
}

TEST(ParityFix, FallsBackToOneQubitGateQubits) {
  const Assignment prev({0, 0, 1, 1});
  const Timeslice slice = {h(0), cx(1, 2), h(3)};
  const RepairPlan plan = parity_fix(collect_unfeasible(prev, slice), prev,
                                     slice, Architecture(2, 2));
  ASSERT_EQ(plan.ops.size(), 2u);
  EXPECT_EQ(plan.ops[1], (UnfeasibleOp{0, 3, OpOrigin::Auxiliary}));
}

TEST(ParityFix, SpareRoomNeedsNoAuxiliary) {
  // One free slot on each core already lets the op land somewhere.
  const Assignment prev({0, 1});
  const Timeslice slice = {cx(0, 1)};
  const RepairPlan plan =
      parity_fix(collect_unfeasible(prev, slice), prev, slice,
                 Architecture(2, 2));
  EXPECT_EQ(plan.ops.size(), 1u);
  EXPECT_TRUE(plan.pinned.empty());
}

TEST(ParityFix, OddCapacityUsesPinnedMove) {
  // Core 1 holds a busy pair, so only core 0 can give up a qubit.
  const Assignment prev({0, 0, 0, 1, 1, 1});
  const Timeslice slice = {cx(2, 3), cx(4, 5), h(0), h(1)};
  const Architecture arch(2, 3);
  const RepairPlan plan =
      parity_fix(collect_unfeasible(prev, slice), prev, slice, arch);
  ASSERT_EQ(plan.ops.size(), 1u);
  ASSERT_EQ(plan.pinned.size(), 1u);
  EXPECT_EQ(plan.pinned[0], (PinnedMove{0, 1}));
  const auto free = free_spaces_after_lift(plan, prev, arch);
  EXPECT_EQ(free, (std::vector<std::size_t>{2, 0}));
}

TEST(FreeSpaces, CountsLiftedEndpoints) {
  const RepairPlan plan{{{1, 2, OpOrigin::Gate}, {0, 3, OpOrigin::Auxiliary}},
                        {}};
  EXPECT_EQ(free_spaces_after_lift(plan, kBlock, Architecture(2, 2)),
            (std::vector<std::size_t>{2, 2}));
}

TEST(CostBasic, Examples) {
  const std::vector<std::size_t> free = {2, 2, 1};
  const Assignment prev({0, 1, 2});
  const UnfeasibleOp op{0, 1};
  EXPECT_EQ(cost_basic(op, 0, prev, free), 1.0);
  EXPECT_EQ(cost_basic(op, 1, prev, free), 1.0);
  EXPECT_EQ(cost_basic(UnfeasibleOp{0, 2}, 1, prev, free), 2.0);
  EXPECT_FALSE(cost_basic(op, 2, prev, free));
}

TEST(CostBasic, RelocationCostHook) {
  HqaConfig config;
  config.relocation_cost = [](Core from, Core to) {
    return from > to ? from - to : to - from;
  };
  const Assignment prev({0, 1, 3});
  const std::vector<std::size_t> free = {2, 2, 2, 2};
  EXPECT_EQ(cost_basic(UnfeasibleOp{0, 2}, 1, prev, free, config), 3.0);
}

TEST(AttractionQubit, Examples) {
  // q0 meets q5 in slice 1; the reference slice is 0.
  const TimeslicedCircuit slices(6, {{h(0)}, {cx(0, 5)}, {h(2)}});
  Residency residency = residency_of(Assignment({0, 0, 0, 0, 0, 1}));
  EXPECT_DOUBLE_EQ(attraction_qubit(0, 1, residency, slices, 0), 0.5);
  EXPECT_DOUBLE_EQ(attraction_qubit(0, 0, residency, slices, 0), 0.0);
  EXPECT_DOUBLE_EQ(attraction_qubit(3, 0, residency, slices, 0), 0.0);
  residency[5].reset();
  EXPECT_DOUBLE_EQ(attraction_qubit(0, 1, residency, slices, 0), 0.0);
  const auto profile = attraction_profile(0, 2, residency_of(Assignment(
                                                    {0, 0, 0, 0, 0, 1})),
                                          slices, 0, kDefaultHorizon);
  EXPECT_EQ(profile, (std::vector<double>{0.0, 0.5}));
}

TEST(CostAttraction, Examples) {
  const Assignment prev({0, 1});
  const std::vector<std::size_t> free = {2, 2, 0};
  EXPECT_EQ(cost_attraction({0, 1}, 0, prev, free, 0.5, 0.0), 0.75);
  EXPECT_EQ(cost_attraction({0, 1}, 2, prev, {2, 2, 2}, 0.0, 0.0), 2.0);
  EXPECT_FALSE(cost_attraction({0, 1}, 2, prev, free, 5.0, 5.0));
}

TEST(HqaStep, RepairsWithAuxiliaryOp) {
  const TimeslicedCircuit slices(4, {{cx(1, 2)}});
  const Assignment next = hqa_step(kBlock, slices, -1, Architecture(2, 2));
  EXPECT_EQ(next, Assignment({1, 0, 0, 1}));
  EXPECT_EQ(relocations(kBlock, next), 2u);
}

TEST(HqaStep, LiftedQubitsExertNoAttraction) {
  const TimeslicedCircuit slices(4, {{cx(1, 2)}, {cx(2, 3)}});
  for (bool attraction : {false, true}) {
    HqaConfig config;
    config.use_attraction = attraction;
    EXPECT_EQ(hqa_step(kBlock, slices, -1, Architecture(2, 2), config),
              Assignment({1, 0, 0, 1}));
  }
}

TEST(HqaStep, AttractionPullsTowardFuturePartner) {
  // q4 waits on core 1 and meets q1 next; basic costs tie between cores.
  const Assignment prev({0, 0, 1, 1, 1, 0});
  const Architecture arch(2, 3);
  const TimeslicedCircuit slices(
      6, {{h(0)}, {cx(1, 2)}, {cx(1, 4)}});
  HqaConfig off;
  off.use_attraction = false;
  EXPECT_EQ(hqa_step(prev, slices, 0, arch, off).core_of(1), 0u);
  EXPECT_EQ(hqa_step(prev, slices, 0, arch).core_of(1), 1u);
}

TEST(HqaStep, FeasibleSliceKeepsAssignment) {
  const TimeslicedCircuit slices(4, {{cx(0, 1), cx(2, 3)}});
  EXPECT_EQ(hqa_step(kBlock, slices, -1, Architecture(2, 2)), kBlock);
  EXPECT_THROW(hqa_step(kBlock, slices, 0, Architecture(2, 2)),
               std::out_of_range);
}

TEST(HqaStep, MoreOpsThanCoresRunInBatches) {
  const Assignment prev({0, 1, 0, 1, 0, 1, 0, 1});
  const Architecture arch(2, 4);
  const TimeslicedCircuit slices(
      8, {{cx(0, 1), cx(2, 3), cx(4, 5), cx(6, 7)}});
  const Assignment next = hqa_step(prev, slices, -1, arch);
  EXPECT_TRUE(is_valid(next, slices.slice(0), arch));
  EXPECT_EQ(relocations(prev, next), 4u);
}

TEST(HqaMap, GhzOnTwoCores) {
  const Circuit ghz = gen_ghz(4);
  const Architecture arch(2, 2);
  const auto slices = timeslice(ghz);
  const AssignmentPath path = hqa_map(ghz, arch);
  EXPECT_FALSE(first_invalid_slice(path, slices));
  const auto comms = count_communications(path);
  EXPECT_GE(comms, 2u);
  EXPECT_GE(comms, *optimal_communications(slices, arch));
}

TEST(HqaMap, NoTwoQubitGatesMeansNoMoves) {
  const Circuit c(4, {h(0), h(1), h(0)});
  const AssignmentPath path = hqa_map(c, Architecture(2, 2));
  EXPECT_EQ(path.slices.size(), 2u);
  EXPECT_EQ(count_communications(path), 0u);
}

TEST(HqaMap, RejectsOversizedCircuits) {
  EXPECT_THROW(hqa_map(gen_ghz(5), Architecture(2, 2)), CapacityError);
}

}  // namespace
}  // namespace mcmap
