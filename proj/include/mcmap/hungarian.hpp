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
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mcmap {

/** Absolute tolerance used when comparing real-valued costs. */
inline constexpr double kCostTolerance = 1e-9;

/**
 * Dense rows x cols matrix of finite costs, where individual entries may be
 * marked forbidden. Rows are the things being assigned, columns the slots.
 */
class CostMatrix {
 public:
  /** All entries start at 0. */
  CostMatrix(std::size_t rows, std::size_t cols);
  CostMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  /** nullopt for forbidden entries. */
  std::optional<double> at(std::size_t r, std::size_t c) const;
  bool forbidden(std::size_t r, std::size_t c) const {
    return forbidden_[r * cols_ + c] != 0;
  }
  void set(std::size_t r, std::size_t c, double cost);
  void forbid(std::size_t r, std::size_t c);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> cost_;
  std::vector<unsigned char> forbidden_;
};

struct AssignmentSolution {
  std::vector<std::size_t> col_of_row;
  double total_cost = 0.0;
};

/** No matching avoids the forbidden entries. */
class InfeasibleAssignment : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Minimum-cost injective row -> column assignment for rows <= cols.
 *
 * Runs the O(n^3) shortest-augmenting-path Hungarian method on the matrix
 * padded to square with zero-cost dummy rows. The final dual potentials
 * identify every optimal matching (they all live on zero reduced-cost
 * entries), which is then walked row by row to return the
 * lexicographically smallest optimal col_of_row.
 *
 * Throws InfeasibleAssignment if forbidden entries rule out every matching
 * and std::invalid_argument if rows > cols or the matrix is empty.
 */
AssignmentSolution solve(const CostMatrix &costs);

/** Subtracts the smallest finite entry from every finite entry. */
CostMatrix shift_to_nonnegative(const CostMatrix &costs);

}  // namespace mcmap
