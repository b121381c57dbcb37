// Copyright 2026 The flowmech Authors
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

#include <stdexcept>
#include <vector>

#include "flowmech/rational.hpp"

namespace flowmech {

enum class LpStatus { Optimal, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Optimal;
  Rational objective;
  std::vector<Rational> solution;
};

/// maximize b.y  subject to  A y <= c, y >= 0, where c >= 0 so the origin
/// is a feasible basis. Dense tableau simplex in exact arithmetic with
/// Bland's rule, which cannot cycle.
///
/// `a` is row-major with c.size() rows and b.size() columns.
inline LpResult maximize_from_origin(const std::vector<std::vector<Rational>>& a,
                                     const std::vector<Rational>& b,
                                     const std::vector<Rational>& c) {
  const std::size_t rows = c.size();
  const std::size_t vars = b.size();
  const std::size_t cols = vars + rows;  // structural + slack
  for (const auto& ci : c) {
    if (ci < 0) throw std::invalid_argument("maximize_from_origin needs c >= 0");
  }
  if (a.size() != rows) throw std::invalid_argument("row count mismatch");

  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1, Rational(0)));
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    if (a[r].size() != vars) throw std::invalid_argument("column count mismatch");
    for (std::size_t j = 0; j < vars; ++j) t[r][j] = a[r][j];
    t[r][vars + r] = 1;
    t[r][cols] = c[r];
    basis[r] = vars + r;
  }
  std::vector<Rational> z(cols + 1, Rational(0));  // reduced costs, objective in z[cols]
  for (std::size_t j = 0; j < vars; ++j) z[j] = -b[j];

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (z[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][cols] / t[r][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == rows) return {LpStatus::Unbounded, 0, {}};

    const Rational pivot = t[leave][enter];
    for (auto& cell : t[leave]) cell /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational factor = t[r][enter];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (t[leave][j] != 0) t[r][j] -= factor * t[leave][j];
      }
    }
    if (z[enter] != 0) {
      const Rational factor = z[enter];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (t[leave][j] != 0) z[j] -= factor * t[leave][j];
      }
    }
    basis[leave] = enter;
  }

  LpResult result;
  result.objective = z[cols];
  result.solution.assign(vars, Rational(0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] < vars) result.solution[basis[r]] = t[r][cols];
  }
  return result;
}

}  // namespace flowmech
