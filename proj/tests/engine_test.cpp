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

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include <gtest/gtest.h>

#include "geols/covering.hpp"
#include "geols/engine.hpp"
#include "geols/error.hpp"
#include "geols/harness/rng.hpp"
#include "geols/oracle.hpp"
#include "geols/packing.hpp"

namespace geols {
namespace {

// Hides monotone() so the scanner takes no shortcuts.
template <LocalSearchProblem P>
struct Unpruned {
  const P* inner;
  int ground_size() const { return inner->ground_size(); }
  Direction direction() const { return inner->direction(); }
  bool is_feasible(std::span<const int> s) const { return inner->is_feasible(s); }
};

// Feasible when the selection has between lo and hi elements; neither upward
// nor downward closed.
struct SizeWindow {
  int n;
  int lo;
  int hi;
  Direction dir;
  int ground_size() const { return n; }
  Direction direction() const { return dir; }
  bool is_feasible(std::span<const int> s) const {
    return static_cast<int>(s.size()) >= lo && static_cast<int>(s.size()) <= hi;
  }
};

std::vector<IndexSet> AllSubsets(std::span<const int> from) {
  std::vector<IndexSet> out;
  const std::size_t m = from.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    IndexSet s;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) s.push_back(from[i]);
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Reference for the canonical first improving swap: list every legal swap,
// order by (removed, added), return the first that lands on a feasible set.
template <LocalSearchProblem P>
std::optional<Swap> ReferenceSwap(const P& p, const IndexSet& current, int k) {
  IndexSet complement;
  for (int i = 0; i < p.ground_size(); ++i) {
    if (!std::binary_search(current.begin(), current.end(), i)) complement.push_back(i);
  }
  const bool minimize = p.direction() == Direction::kMinimize;
  std::vector<Swap> legal;
  for (const IndexSet& r : AllSubsets(current)) {
    for (const IndexSet& a : AllSubsets(complement)) {
      const int na = static_cast<int>(r.size());
      const int nb = static_cast<int>(a.size());
      const bool ok = minimize ? (na <= k && nb < na) : (na < nb && nb <= k);
      if (ok) legal.push_back({r, a});
    }
  }
  std::sort(legal.begin(), legal.end(), [](const Swap& x, const Swap& y) {
    return std::tie(x.removed, x.added) < std::tie(y.removed, y.added);
  });
  for (const Swap& s : legal) {
    const IndexSet next = ApplySwap(current, s);
    if (p.is_feasible(next)) return s;
  }
  return std::nullopt;
}

CoverageProblem RandomCoverage(SplitMix64& rng, int sets, int elements) {
  std::vector<std::vector<int>> cov(static_cast<std::size_t>(sets));
  for (auto& c : cov) {
    for (int e = 0; e < elements; ++e) {
      if (rng.uniform() < 0.35) c.push_back(e);
    }
  }
  // Make the full family feasible.
  for (int e = 0; e < elements; ++e) cov[rng.below(cov.size())].push_back(e);
  for (auto& c : cov) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  return CoverageProblem(elements, std::move(cov));
}

IndependentSetProblem RandomGraph(SplitMix64& rng, int n, double p) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.uniform() < p) edges.emplace_back(u, v);
    }
  }
  return IndependentSetProblem(n, edges);
}

IndexSet RandomSubset(SplitMix64& rng, int n) {
  IndexSet s;
  for (int i = 0; i < n; ++i) {
    if (rng.uniform() < 0.5) s.push_back(i);
  }
  return s;
}

TEST(LocalSearch, MinCoverNeedsTwoForOneSwap) {
  // d0 covers every point; d1 and d2 cover parts. Dropping d0 comes first in
  // lexicographic order, after which only a 2-for-1 swap improves.
  const CoverageProblem p(3, {{0, 1, 2}, {0}, {1, 2}});
  const Solution one = local_search(p, {});
  EXPECT_EQ(one.selected, (IndexSet{1, 2}));
  EXPECT_EQ(one.initial, (IndexSet{0, 1, 2}));
  SearchConfig cfg;
  cfg.k = 2;
  const Solution two = local_search(p, cfg);
  EXPECT_EQ(two.selected, (IndexSet{0}));
  EXPECT_LE(two.iterations, 3);
}

TEST(LocalSearch, ShallowSetOverlappingDisksGiveOne) {
  ShallowSetInstance<Disk> inst{{{{0, 0}, 1, 0}, {{0.5, 0}, 1, 1}, {{0.25, 0.4}, 1, 2}}, 1};
  const Solution s = local_search(ShallowSetProblem<Disk>(inst), {});
  EXPECT_EQ(s.selected.size(), 1u);
  EXPECT_TRUE(s.initial.empty());
}

TEST(LocalSearch, ShallowSetDisjointDisksGiveBoth) {
  ShallowSetInstance<Disk> inst{{{{0, 0}, 1, 0}, {{5, 0}, 1, 1}}, 1};
  const Solution s = local_search(ShallowSetProblem<Disk>(inst), {});
  EXPECT_EQ(s.selected, (IndexSet{0, 1}));
}

TEST(LocalSearch, RejectsBadBudget) {
  const CoverageProblem p(1, {{0}});
  SearchConfig cfg;
  cfg.k = 0;
  try {
    local_search(p, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidInput);
  }
}

TEST(LocalSearch, InfeasibleStart) {
  // Element 1 is covered by nothing, so the full family is infeasible.
  const CoverageProblem p(2, {{0}, {0}});
  try {
    local_search(p, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleStart);
  }
}

TEST(LocalSearch, MaxIterationsStopsEarly) {
  const CoverageProblem p(1, {{0}, {0}, {0}, {0}});
  SearchConfig cfg;
  cfg.max_iterations = 1;
  const Solution s = local_search(p, cfg);
  EXPECT_EQ(s.iterations, 1);
  EXPECT_FALSE(s.converged);
  EXPECT_EQ(s.selected, (IndexSet{1, 2, 3}));
}

TEST(FindImprovingSwap, Examples) {
  const CoverageProblem redundant(2, {{0, 1}, {1}});
  auto swap = find_improving_swap(redundant, IndexSet{0, 1}, 1);
  ASSERT_TRUE(swap);
  EXPECT_EQ(swap->removed, (IndexSet{1}));
  EXPECT_TRUE(swap->added.empty());
  EXPECT_FALSE(find_improving_swap(redundant, IndexSet{0}, 1));

  // One triangle, nothing selected yet.
  auto inst = TriangleMatchingInstance::Create({{0, 0}, {1, 0}, {0.5, 0.8}}, 1.0);
  ASSERT_EQ(inst.triangles.size(), 1u);
  swap = find_improving_swap(TriangleMatchingProblem(inst), IndexSet{}, 1);
  ASSERT_TRUE(swap);
  EXPECT_TRUE(swap->removed.empty());
  EXPECT_EQ(swap->added, (IndexSet{0}));
}

TEST(VerifyLocalOptimality, Examples) {
  const CoverageProblem p(2, {{0, 1}, {1}});
  EXPECT_FALSE(verify_local_optimality(p, IndexSet{0, 1}, 1));
  EXPECT_TRUE(verify_local_optimality(p, local_search(p, {}).selected, 1));
  EXPECT_FALSE(verify_local_optimality(p, IndexSet{1}, 1)) << "infeasible input";
  const IndependentSetProblem g(2, std::vector<Edge>{});
  EXPECT_FALSE(verify_local_optimality(g, IndexSet{}, 1));
}

TEST(FindImprovingSwap, MatchesReferenceOrderMinimize) {
  SplitMix64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const int sets = 3 + static_cast<int>(rng.below(5));
    const CoverageProblem p = RandomCoverage(rng, sets, 5);
    IndexSet current = RandomSubset(rng, sets);
    if (!p.is_feasible(current)) {
      current.clear();
      for (int i = 0; i < sets; ++i) current.push_back(i);
    }
    for (int k = 1; k <= 3; ++k) {
      const auto ref = ReferenceSwap(p, current, k);
      EXPECT_EQ(find_improving_swap(p, current, k), ref);
      EXPECT_EQ(find_improving_swap(Unpruned<CoverageProblem>{&p}, current, k), ref);
    }
  }
}

TEST(FindImprovingSwap, MatchesReferenceOrderMaximize) {
  SplitMix64 rng(42);
  for (int t = 0; t < 300; ++t) {
    const int n = 3 + static_cast<int>(rng.below(5));
    const IndependentSetProblem p = RandomGraph(rng, n, 0.4);
    IndexSet current = RandomSubset(rng, n);
    while (!p.is_feasible(current)) current.pop_back();
    for (int k = 1; k <= 3; ++k) {
      const auto ref = ReferenceSwap(p, current, k);
      EXPECT_EQ(find_improving_swap(p, current, k), ref);
      EXPECT_EQ(find_improving_swap(Unpruned<IndependentSetProblem>{&p}, current, k), ref);
    }
  }
}

TEST(FindImprovingSwap, NonMonotoneFeasibility) {
  for (Direction dir : {Direction::kMinimize, Direction::kMaximize}) {
    const SizeWindow p{6, 2, 4, dir};
    for (const IndexSet& current : {IndexSet{0, 1}, IndexSet{0, 2, 4}, IndexSet{1, 2, 3, 5}}) {
      for (int k = 1; k <= 4; ++k) {
        EXPECT_EQ(find_improving_swap(p, current, k), ReferenceSwap(p, current, k));
      }
    }
  }
}

TEST(LocalSearch, DeterministicIncludingTrace) {
  SplitMix64 rng(7);
  const CoverageProblem p = RandomCoverage(rng, 10, 12);
  SearchConfig cfg;
  cfg.k = 2;
  const Solution a = local_search(p, cfg);
  const Solution b = local_search(p, cfg);
  EXPECT_EQ(a.selected, b.selected);
  EXPECT_EQ(a.trace, b.trace);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(LocalSearch, PruningDoesNotChangeTrace) {
  SplitMix64 rng(9);
  for (int t = 0; t < 30; ++t) {
    const CoverageProblem cover = RandomCoverage(rng, 9, 10);
    const IndependentSetProblem graph = RandomGraph(rng, 9, 0.3);
    for (int k = 1; k <= 3; ++k) {
      SearchConfig cfg;
      cfg.k = k;
      EXPECT_EQ(local_search(cover, cfg).trace,
                local_search(Unpruned<CoverageProblem>{&cover}, cfg).trace);
      EXPECT_EQ(local_search(graph, cfg).trace,
                local_search(Unpruned<IndependentSetProblem>{&graph}, cfg).trace);
    }
  }
}

TEST(LocalSearch, ReplayAndTermination) {
  SplitMix64 rng(10);
  for (int t = 0; t < 50; ++t) {
    const CoverageProblem cover = RandomCoverage(rng, 10, 10);
    const IndependentSetProblem graph = RandomGraph(rng, 10, 0.3);
    for (int k = 1; k <= 3; ++k) {
      SearchConfig cfg;
      cfg.k = k;
      for (const Solution& s : {local_search(cover, cfg), local_search(graph, cfg)}) {
        EXPECT_LE(s.iterations, 10);
        EXPECT_EQ(static_cast<int>(s.trace.size()), s.iterations);
      }
      const Solution sc = local_search(cover, cfg);
      EXPECT_EQ(replay_trace(cover, sc.initial, sc.trace), sc.selected);
      EXPECT_TRUE(verify_local_optimality(cover, sc.selected, k));
      const Solution sg = local_search(graph, cfg);
      EXPECT_EQ(replay_trace(graph, sg.initial, sg.trace), sg.selected);
      EXPECT_TRUE(verify_local_optimality(graph, sg.selected, k));
    }
  }
}

TEST(ReplayTrace, RejectsBrokenTraces) {
  const CoverageProblem p(2, {{0, 1}, {1}, {0}});
  const IndexSet start{0, 1, 2};
  // Removing 0 and adding nothing leaves point 0 covered by 2, point 1 by 1.
  EXPECT_TRUE(replay_trace(p, start, std::vector<Swap>{{{0}, {}}}));
  // Same cardinality, so not an improvement.
  EXPECT_FALSE(replay_trace(p, IndexSet{0, 1}, std::vector<Swap>{{{1}, {2}}}));
  // Adds an element that is already selected.
  EXPECT_FALSE(replay_trace(p, start, std::vector<Swap>{{{0, 1}, {2}}}));
  // Removes an element that is not selected.
  EXPECT_FALSE(replay_trace(p, IndexSet{0}, std::vector<Swap>{{{1}, {}}}));
  // Lands on an infeasible set.
  EXPECT_FALSE(replay_trace(p, start, std::vector<Swap>{{{0, 1}, {}}}));
}

TEST(LocalSearch, FullBudgetIsGloballyOptimal) {
  SplitMix64 rng(12);
  for (int t = 0; t < 40; ++t) {
    const CoverageProblem cover = RandomCoverage(rng, 9, 9);
    const IndependentSetProblem graph = RandomGraph(rng, 9, 0.35);
    SearchConfig cfg;
    cfg.k = 9;
    EXPECT_EQ(static_cast<int>(local_search(cover, cfg).selected.size()),
              exact_optimum(cover).value);
    EXPECT_EQ(static_cast<int>(local_search(graph, cfg).selected.size()),
              exact_optimum(graph).value);
  }
}

TEST(LocalSearch, NeighborhoodFilterKeepsLocalOptimality) {
  SplitMix64 rng(13);
  for (int t = 0; t < 40; ++t) {
    const CoverageProblem cover = RandomCoverage(rng, 10, 10);
    for (int k = 1; k <= 3; ++k) {
      SearchConfig cfg;
      cfg.k = k;
      cfg.adjacent = [&](int a, int b) { return cover.adjacent(a, b); };
      const Solution s = local_search(cover, cfg);
      EXPECT_TRUE(verify_local_optimality(cover, s.selected, k));
      EXPECT_EQ(replay_trace(cover, s.initial, s.trace), s.selected);
    }
  }
}

TEST(LocalSearch, NoBudgetBeatsTheOptimum) {
  SplitMix64 rng(14);
  for (int t = 0; t < 20; ++t) {
    const CoverageProblem cover = RandomCoverage(rng, 8, 8);
    const int best = exact_optimum(cover).value;
    for (int k = 1; k <= 8; ++k) {
      SearchConfig cfg;
      cfg.k = k;
      EXPECT_GE(static_cast<int>(local_search(cover, cfg).selected.size()), best);
    }
  }
}

}  // namespace
}  // namespace geols
