// Copyright 2026 The Authors.
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

// Exhaustive ground truth for desk-sized instances.

#ifndef GEOLS_ORACLE_HPP_
#define GEOLS_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geols/engine.hpp"
#include "geols/error.hpp"
#include "geols/geom.hpp"

namespace geols {

inline constexpr int kDefaultSizeCap = 20;

struct OracleResult {
  IndexSet optimum;
  int value = 0;
  std::int64_t explored = 0;
};

namespace internal {

// Advances `combo` (sorted, values in [0, n)) to the next k-combination in
// lexicographic order. Returns false after the last one.
inline bool NextCombination(std::vector<int>& combo, int n) {
  const int k = static_cast<int>(combo.size());
  int i = k - 1;
  while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++combo[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j) {
    combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
  }
  return true;
}

}  // namespace internal

// Optimum by enumeration in cardinality order (increasing for minimization,
// decreasing for maximization), lexicographic within a cardinality. The first
// feasible subset met is returned, which fixes the tie-break.
template <LocalSearchProblem P>
OracleResult exact_optimum(const P& problem, int size_cap = kDefaultSizeCap) {
  const int n = problem.ground_size();
  if (n > size_cap) {
    throw Error(ErrorCode::kTooLarge, "ground size " + std::to_string(n) +
                                          " exceeds size cap " + std::to_string(size_cap));
  }
  const bool minimize = problem.direction() == Direction::kMinimize;
  OracleResult result;
  for (int step = 0; step <= n; ++step) {
    const int size = minimize ? step : n - step;
    std::vector<int> combo(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) combo[static_cast<std::size_t>(i)] = i;
    do {
      ++result.explored;
      if (problem.is_feasible(std::span<const int>(combo))) {
        result.optimum = combo;
        result.value = size;
        return result;
      }
    } while (internal::NextCombination(combo, n));
  }
  throw Error(ErrorCode::kInfeasible, "no feasible subset exists");
}

// Depth sampled on a regular grid of spacing `resolution` over the objects'
// bounding box, plus at every object center. Rows are swept with interval
// events, and the boundary columns of every interval are re-checked with
// contains(), so the result equals evaluating depth_at at every grid point.
template <Region Shape>
int grid_depth_oracle(std::span<const Shape> objects, double resolution) {
  if (!(resolution > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "grid resolution must be positive");
  }
  if (objects.empty()) return 0;
  double lo_x = std::numeric_limits<double>::infinity();
  double lo_y = lo_x;
  double hi_x = -lo_x;
  double hi_y = -lo_x;
  for (const Shape& o : objects) {
    lo_x = std::min(lo_x, o.center.x - o.extent());
    hi_x = std::max(hi_x, o.center.x + o.extent());
    lo_y = std::min(lo_y, o.center.y - o.extent());
    hi_y = std::max(hi_y, o.center.y + o.extent());
  }
  int best = 0;
  for (const Shape& o : objects) best = std::max(best, depth_at(o.center, objects));

  const auto columns = static_cast<std::int64_t>(std::ceil((hi_x - lo_x) / resolution));
  const auto rows = static_cast<std::int64_t>(std::ceil((hi_y - lo_y) / resolution));
  std::vector<std::pair<std::int64_t, int>> events;
  events.reserve(2 * objects.size());
  for (std::int64_t row = 0; row <= rows; ++row) {
    const double y = lo_y + static_cast<double>(row) * resolution;
    events.clear();
    for (const Shape& o : objects) {
      const double dy = std::abs(y - o.center.y);
      const double reach = o.extent() + kTolerance;
      if (dy > reach + 1e-12) continue;
      double half_width = reach;
      if constexpr (Shape::kMetric == Metric::kL2) {
        half_width = std::sqrt(std::max(0.0, reach * reach - dy * dy));
      }
      auto first = static_cast<std::int64_t>(
          std::ceil((o.center.x - half_width - lo_x) / resolution)) - 1;
      auto last = static_cast<std::int64_t>(
          std::floor((o.center.x + half_width - lo_x) / resolution)) + 1;
      first = std::max<std::int64_t>(first, 0);
      last = std::min(last, columns);
      auto at = [&](std::int64_t col) {
        return Point2{lo_x + static_cast<double>(col) * resolution, y};
      };
      while (first <= last && !contains(o, at(first))) ++first;
      while (last >= first && !contains(o, at(last))) --last;
      if (first > last) continue;
      events.emplace_back(first, +1);
      events.emplace_back(last + 1, -1);
    }
    // Ends sort before starts at the same column.
    std::sort(events.begin(), events.end());
    int depth = 0;
    for (const auto& [col, delta] : events) {
      depth += delta;
      best = std::max(best, depth);
    }
  }
  return best;
}

template <Region Shape>
int grid_depth_oracle(const std::vector<Shape>& objects, double resolution) {
  return grid_depth_oracle(std::span<const Shape>(objects), resolution);
}

}  // namespace geols

#endif  // GEOLS_ORACLE_HPP_
