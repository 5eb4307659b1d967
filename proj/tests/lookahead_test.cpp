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

#include <cmath>

#include "mcmap/lookahead.hpp"

namespace mcmap {
namespace {

Gate cx(Qubit a, Qubit b) { return Gate("cx", {a, b}); }
Gate h(Qubit a) { return Gate("h", {a}); }

TEST(Weight, Ordering) {
  EXPECT_LT(Weight::finite(0.5), Weight::finite(0.75));
  EXPECT_LT(Weight::finite(1e300), Weight::infinite());
  EXPECT_EQ(Weight::infinite(), Weight::infinite());
  EXPECT_TRUE(std::isinf(Weight::infinite().value()));
  EXPECT_THROW(Weight::finite(-0.1), std::invalid_argument);
  EXPECT_THROW(Weight::finite(std::nan("")), std::invalid_argument);
}

TEST(InteractionGraph, AbsentEdgesWeighZero) {
  InteractionGraph g(3);
  g.set(2, 0, Weight::finite(0.25));
  EXPECT_EQ(g.weight(0, 2), Weight::finite(0.25));
  EXPECT_EQ(g.weight(0, 1), Weight::finite(0.0));
  EXPECT_THROW(g.set(1, 1, Weight::finite(1)), std::invalid_argument);
  EXPECT_THROW(g.set(1, 3, Weight::finite(1)), std::out_of_range);
}

TEST(LookaheadWeight, NextSliceOnly) {
  const TimeslicedCircuit s(2, {{h(0)}, {cx(0, 1)}});
  EXPECT_DOUBLE_EQ(lookahead_weight(s, 0, 0, 1), 0.5);
}

TEST(LookaheadWeight, TwoFutureInteractions) {
  const TimeslicedCircuit s(
      3, {{h(0)}, {cx(0, 1)}, {cx(1, 2)}, {cx(1, 0)}});
  EXPECT_DOUBLE_EQ(lookahead_weight(s, 0, 0, 1), 0.625);
  EXPECT_DOUBLE_EQ(lookahead_weight(s, 0, 1, 0), 0.625);
}

TEST(LookaheadWeight, NoFutureInteractions) {
  const TimeslicedCircuit s(3, {{cx(0, 1)}, {cx(1, 2)}});
  EXPECT_DOUBLE_EQ(lookahead_weight(s, 0, 0, 2), 0.0);
  EXPECT_DOUBLE_EQ(lookahead_weight(s, 1, 1, 2), 0.0);
}

TEST(LookaheadWeight, HorizonTruncates) {
  const TimeslicedCircuit s(2, {{h(0)}, {h(0)}, {h(0)}, {cx(0, 1)}});
  EXPECT_DOUBLE_EQ(lookahead_weight(s, 0, 0, 1, 3), 0.125);
  EXPECT_DOUBLE_EQ(lookahead_weight(s, 0, 0, 1, 2), 0.0);
}

TEST(LookaheadWeight, RejectsBadArguments) {
  const TimeslicedCircuit s(2, {{cx(0, 1)}});
  EXPECT_THROW(lookahead_weight(s, 1, 0, 1), std::out_of_range);
  EXPECT_THROW(lookahead_weight(s, 0, 1, 1), std::invalid_argument);
}

TEST(BuildInteractionGraph, CurrentPairIsInfinite) {
  const TimeslicedCircuit s(2, {{cx(0, 1)}});
  const auto g = build_interaction_graph(s, 0);
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.weight(0, 1), Weight::infinite());
}

TEST(BuildInteractionGraph, FutureOnlyEdge) {
  const TimeslicedCircuit s(4, {{h(0)}, {h(1)}, {cx(2, 3)}});
  const auto g = build_interaction_graph(s, 0);
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.weight(2, 3), Weight::finite(0.25));
}

TEST(BuildInteractionGraph, LastSliceHasNoFiniteEdges) {
  const TimeslicedCircuit s(3, {{cx(1, 2)}, {cx(0, 1)}});
  const auto g = build_interaction_graph(s, 1);
  ASSERT_EQ(g.edges().size(), 1u);
  EXPECT_EQ(g.weight(0, 1), Weight::infinite());
}

TEST(BuildInteractionGraph, InfiniteOverridesFuture) {
  const TimeslicedCircuit s(2, {{cx(0, 1)}, {cx(0, 1)}});
  const auto g = build_interaction_graph(s, 0);
  EXPECT_EQ(g.weight(0, 1), Weight::infinite());
  EXPECT_THROW(build_interaction_graph(s, 2), std::out_of_range);
}

TEST(Decay, PowersOfTwo) {
  EXPECT_DOUBLE_EQ(decay(3, 1), 0.25);
  EXPECT_DOUBLE_EQ(decay(0, -1), 0.5);
}

}  // namespace
}  // namespace mcmap
