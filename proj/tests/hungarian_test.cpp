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

#include "mcmap/hungarian.hpp"
#include "test_support.hpp"

namespace mcmap {
namespace {

using testing::brute_force_assignment;
using testing::random_integer_matrix;

TEST(CostMatrix, Accessors) {
  CostMatrix m(2, 3);
  EXPECT_EQ(m.at(1, 2), 0.0);
  m.set(1, 2, -1.5);
  m.forbid(0, 1);
  EXPECT_EQ(m.at(1, 2), -1.5);
  EXPECT_FALSE(m.at(0, 1));
  EXPECT_TRUE(m.forbidden(0, 1));
  EXPECT_THROW(m.set(0, 0, std::numeric_limits<double>::infinity()),
               std::invalid_argument);
  EXPECT_THROW(m.at(2, 0), std::out_of_range);
  EXPECT_THROW((CostMatrix{{1, 2}, {3}}), std::invalid_argument);
}

TEST(Solve, UniqueOptimum) {
  const auto s = solve(CostMatrix{{1, 2}, {2, 1}});
  EXPECT_EQ(s.col_of_row, (std::vector<std::size_t>{0, 1}));
  EXPECT_DOUBLE_EQ(s.total_cost, 2);
}

TEST(Solve, SingleEntry) {
  const auto s = solve(CostMatrix{{5}});
  EXPECT_EQ(s.col_of_row, (std::vector<std::size_t>{0}));
  EXPECT_DOUBLE_EQ(s.total_cost, 5);
}

TEST(Solve, TiesBreakLexicographically) {
  EXPECT_EQ(solve(CostMatrix{{1, 1}, {1, 1}}).col_of_row,
            (std::vector<std::size_t>{0, 1}));
  // Both {0->1, 1->0} and {0->0, 1->1} cost 2 here.
  EXPECT_EQ(solve(CostMatrix{{1, 1, 5}, {1, 1, 5}}).col_of_row,
            (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(solve(CostMatrix{{2, 1, 1}, {0, 1, 1}}).col_of_row,
            (std::vector<std::size_t>{1, 0}));
}

TEST(Solve, RectangularPicksCheapestColumns) {
  const auto s = solve(CostMatrix{{4, 1, 3}, {2, 0, 5}});
  EXPECT_EQ(s.col_of_row, (std::vector<std::size_t>{1, 0}));
  EXPECT_DOUBLE_EQ(s.total_cost, 3);
}

TEST(Solve, NegativeCosts) {
  const auto s = solve(CostMatrix{{-1, -3}, {-2, -5}});
  EXPECT_EQ(s.col_of_row, (std::vector<std::size_t>{0, 1}));
  EXPECT_DOUBLE_EQ(s.total_cost, -6);
}

TEST(Solve, ForbiddenEntriesAreNeverChosen) {
  CostMatrix m{{0, 9}, {0, 9}};
  m.forbid(0, 0);
  const auto s = solve(m);
  EXPECT_EQ(s.col_of_row, (std::vector<std::size_t>{1, 0}));
  EXPECT_DOUBLE_EQ(s.total_cost, 9);
}

TEST(Solve, InfeasibleInputs) {
  CostMatrix row_blocked(2, 2);
  row_blocked.forbid(1, 0);
  row_blocked.forbid(1, 1);
  EXPECT_THROW(solve(row_blocked), InfeasibleAssignment);

  // Every row is allowed somewhere but two rows compete for one column.
  CostMatrix hall(2, 3);
  for (std::size_t r = 0; r < 2; ++r) {
    hall.forbid(r, 1);
    hall.forbid(r, 2);
  }
  EXPECT_THROW(solve(hall), InfeasibleAssignment);
}

TEST(Solve, ShapeErrors) {
  EXPECT_THROW(solve(CostMatrix(3, 2)), std::invalid_argument);
  EXPECT_THROW(solve(CostMatrix(0, 2)), std::invalid_argument);
}

TEST(Solve, MatchesBruteForceWithForbiddenEntries) {
  std::mt19937_64 rng(7);
  std::bernoulli_distribution forbid(0.25);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t k = 2 + trial % 5;
    const std::size_t r = 1 + trial % k;
    CostMatrix m = random_integer_matrix(rng, r, k, -4, 6);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (forbid(rng)) m.forbid(i, j);
      }
    }
    const auto oracle = brute_force_assignment(m);
    if (!oracle) {
      EXPECT_THROW(solve(m), InfeasibleAssignment);
      continue;
    }
    const auto s = solve(m);
    EXPECT_DOUBLE_EQ(s.total_cost, oracle->cost);
    EXPECT_EQ(s.col_of_row, oracle->col_of_row) << "trial " << trial;
    ++checked;
  }
  EXPECT_GT(checked, 150);
}

TEST(ShiftToNonnegative, Examples) {
  const CostMatrix shifted = shift_to_nonnegative(CostMatrix{{-0.5, 0.5}});
  EXPECT_DOUBLE_EQ(*shifted.at(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(*shifted.at(0, 1), 1.0);

  CostMatrix flat{{3, 3}, {3, 3}};
  flat.forbid(1, 0);
  const CostMatrix zero = shift_to_nonnegative(flat);
  EXPECT_DOUBLE_EQ(*zero.at(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(*zero.at(1, 1), 0.0);
  EXPECT_TRUE(zero.forbidden(1, 0));
}

TEST(ShiftToNonnegative, ArgminMatchesBruteForce) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> cost(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    CostMatrix m(5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) m.set(i, j, cost(rng));
    }
    EXPECT_EQ(solve(shift_to_nonnegative(m)).col_of_row,
              brute_force_assignment(m)->col_of_row);
  }
}

}  // namespace
}  // namespace mcmap
