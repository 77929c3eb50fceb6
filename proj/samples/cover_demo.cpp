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

// Small end-to-end walk through the library: a disk cover instance solved by
// 1-swap and 2-swap local search, checked against the exact optimum.

#include <cstdio>
#include <vector>

#include "geols/covering.hpp"
#include "geols/engine.hpp"
#include "geols/geom.hpp"
#include "geols/oracle.hpp"

int main() {
  using geols::Disk;
  using geols::Point2;

  // Three big disks cover everything; the small ones are tempting but
  // redundant once the big ones are in.
  const std::vector<Disk> disks = {
      {{0, 0}, 2.0, 0},   {{4, 0}, 2.0, 1},   {{2, 3}, 2.0, 2},
      {{1, 0}, 1.2, 3},   {{3, 0}, 1.2, 4},   {{1.5, 2}, 1.2, 5},
      {{2.5, 2}, 1.2, 6}, {{2, 0.5}, 0.9, 7},
  };
  const std::vector<Point2> points = {
      {-1, 0}, {0.5, 0.5}, {1.5, -0.5}, {2.5, -0.5}, {3.5, 0.5},
      {5, 0},  {1.5, 2.5}, {2.5, 2.5},  {2, 4},      {2, 1},
  };

  const auto inst = geols::CoverInstance<Disk>::Create(disks, points);
  const auto problem = geols::make_cover_problem(inst);
  std::printf("%zu disks after containment preprocessing, %zu points\n",
              inst.objects.size(), inst.points.size());

  for (int k : {1, 2}) {
    geols::SearchConfig cfg;
    cfg.k = k;
    const auto sol = geols::local_search(problem, cfg);
    std::printf("k=%d: %zu disks after %d swaps:", k, sol.selected.size(), sol.iterations);
    for (int i : sol.selected) std::printf(" %d", inst.objects[static_cast<std::size_t>(i)].id);
    std::printf("\n");
  }

  const auto best = geols::exact_optimum(problem);
  std::printf("optimum: %d disks (%lld subsets explored)\n", best.value,
              static_cast<long long>(best.explored));
  return 0;
}
