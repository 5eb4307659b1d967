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

#include "mcmap/hungarian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mcmap {

CostMatrix::CostMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows),
      cols_(cols),
      cost_(rows * cols, 0.0),
      forbidden_(rows * cols, 0) {}

CostMatrix::CostMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : CostMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t r = 0;
  for (const auto &row : rows) {
    if (row.size() != cols_) {
      throw std::invalid_argument("ragged cost matrix");
    }
    std::size_t c = 0;
    for (double v : row) set(r, c++, v);
    ++r;
  }
}

std::optional<double> CostMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("cost matrix index");
  if (forbidden_[r * cols_ + c]) return std::nullopt;
  return cost_[r * cols_ + c];
}

void CostMatrix::set(std::size_t r, std::size_t c, double cost) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("cost matrix index");
  if (!std::isfinite(cost)) {
    throw std::invalid_argument("cost must be finite; use forbid()");
  }
  cost_[r * cols_ + c] = cost;
  forbidden_[r * cols_ + c] = 0;
}

void CostMatrix::forbid(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("cost matrix index");
  forbidden_[r * cols_ + c] = 1;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SquareProblem {
  std::size_t n;
  std::vector<double> a;  // +inf marks forbidden
  double cost(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

// Shortest augmenting path Hungarian method. Returns col_of_row and fills
// the dual potentials u (rows) and v (cols).
std::vector<std::size_t> hungarian(const SquareProblem &p,
                                   std::vector<double> &u,
                                   std::vector<double> &v) {
  const std::size_t n = p.n;
  // 1-based internally; index 0 is the virtual source column.
  u.assign(n + 1, 0.0);
  v.assign(n + 1, 0.0);
  std::vector<std::size_t> row_of_col(n + 1, 0), way(n + 1, 0);
  std::vector<double> minv(n + 1);
  std::vector<char> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    row_of_col[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = row_of_col[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double c = p.cost(i0 - 1, j - 1);
        if (c != kInf) {
          const double cur = c - u[i0] - v[j];
          if (cur < minv[j]) {
            minv[j] = cur;
            way[j] = j0;
          }
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (j1 == 0) {
        throw InfeasibleAssignment(
            "no assignment avoids the forbidden entries (row " +
            std::to_string(i - 1) + ")");
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of_col[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of_col[j0] = row_of_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> col_of_row(n);
  for (std::size_t j = 1; j <= n; ++j) col_of_row[row_of_col[j] - 1] = j - 1;
  // Shift to 0-based potentials.
  u.erase(u.begin());
  v.erase(v.begin());
  return col_of_row;
}

// Walks the zero reduced-cost subgraph to find the lexicographically
// smallest perfect matching, starting from the one the solver returned.
class TightMatching {
 public:
  TightMatching(const SquareProblem &p, const std::vector<double> &u,
                const std::vector<double> &v, std::vector<std::size_t> match,
                double tol)
      : n_(p.n), tight_(p.n * p.n, 0), col_of_row_(std::move(match)),
        row_of_col_(p.n) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const double c = p.cost(i, j);
        tight_[i * n_ + j] = c != kInf && c - u[i] - v[j] <= tol;
      }
      row_of_col_[col_of_row_[i]] = i;
    }
  }

  std::vector<std::size_t> lexicographic_min(std::size_t rows_to_fix) {
    for (std::size_t i = 0; i < rows_to_fix; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!tight_[i * n_ + j]) continue;
        if (col_of_row_[i] == j) break;
        if (row_of_col_[j] < i) continue;  // held by a fixed row
        if (reroute(i, j)) break;
      }
    }
    return col_of_row_;
  }

 private:
  bool tight(std::size_t i, std::size_t j) const { return tight_[i * n_ + j]; }

  // Forces row i onto column j while rows < i keep their columns.
  bool reroute(std::size_t i, std::size_t j) {
    const std::size_t displaced = row_of_col_[j];
    const std::size_t freed = col_of_row_[i];
    visited_.assign(n_, 0);
    visited_[j] = 1;
    path_.clear();
    if (!augment(displaced, freed, i)) return false;
    // path_ holds (row, col) pairs from displaced down to freed.
    for (auto [r, c] : path_) {
      col_of_row_[r] = c;
      row_of_col_[c] = r;
    }
    col_of_row_[i] = j;
    row_of_col_[j] = i;
    return true;
  }

  bool augment(std::size_t row, std::size_t target, std::size_t pivot) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (visited_[c] || !tight(row, c)) continue;
      visited_[c] = 1;
      if (c == target) {
        path_.emplace_back(row, c);
        return true;
      }
      const std::size_t next = row_of_col_[c];
      if (next <= pivot) continue;  // fixed rows and the pivot row stay put
      if (augment(next, target, pivot)) {
        path_.emplace_back(row, c);
        return true;
      }
    }
    return false;
  }

  std::size_t n_;
  std::vector<char> tight_;
  std::vector<std::size_t> col_of_row_;
  std::vector<std::size_t> row_of_col_;
  std::vector<char> visited_;
  std::vector<std::pair<std::size_t, std::size_t>> path_;
};

}  // namespace

AssignmentSolution solve(const CostMatrix &costs) {
  const std::size_t rows = costs.rows();
  const std::size_t cols = costs.cols();
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("cost matrix must be non-empty");
  }
  if (rows > cols) {
    throw std::invalid_argument("cost matrix has more rows than columns");
  }

  SquareProblem p{cols, std::vector<double>(cols * cols, 0.0)};
  double scale = 1.0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = costs.at(r, c);
      p.a[r * cols + c] = v ? *v : kInf;
      if (v) scale = std::max(scale, std::abs(*v));
    }
  }

  std::vector<double> u, v;
  auto match = hungarian(p, u, v);
  TightMatching tight(p, u, v, std::move(match), kCostTolerance * scale);
  auto col_of_row = tight.lexicographic_min(rows);

  AssignmentSolution solution;
  col_of_row.resize(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    solution.total_cost += *costs.at(r, col_of_row[r]);
  }
  solution.col_of_row = std::move(col_of_row);
  return solution;
}

CostMatrix shift_to_nonnegative(const CostMatrix &costs) {
  double lowest = kInf;
  for (std::size_t r = 0; r < costs.rows(); ++r) {
    for (std::size_t c = 0; c < costs.cols(); ++c) {
      if (auto v = costs.at(r, c)) lowest = std::min(lowest, *v);
    }
  }
  CostMatrix shifted(costs.rows(), costs.cols());
  for (std::size_t r = 0; r < costs.rows(); ++r) {
    for (std::size_t c = 0; c < costs.cols(); ++c) {
      if (auto v = costs.at(r, c)) {
        shifted.set(r, c, *v - lowest);
      } else {
        shifted.forbid(r, c);
      }
    }
  }
  return shifted;
}

}  // namespace mcmap
