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

// Executable checks of the conditions the local-search analysis rests on:
// the locality graph between a local-search solution (blue) and an optimum
// (red) for discrete coverage, its bipartite-planar edge bound, and the
// shallowness of the union of two shallow solutions.
//
// The additively weighted Voronoi diagram under
//   delta(p, c) = d(p, c) - r_c
// is never built. Cell ownership is sampled along the segment from a point to
// a center instead; delta is 1-Lipschitz in p, so a sample can only be
// misassigned within one step of a bisector.

#ifndef GEOLS_DIAGNOSTICS_HPP_
#define GEOLS_DIAGNOSTICS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "geols/error.hpp"
#include "geols/geom.hpp"

namespace geols {

inline constexpr double kDefaultWalkStep = 1e-3;

// Index of the center owning p: minimum delta, ties to the lower id.
template <Region Shape>
std::size_t voronoi_owner(Point2 p, std::span<const Shape> centers) {
  std::size_t best = 0;
  double best_delta = weighted_dist(p, centers[0]);
  for (std::size_t i = 1; i < centers.size(); ++i) {
    const double d = weighted_dist(p, centers[i]);
    if (d < best_delta || (d == best_delta && centers[i].id < centers[best].id)) {
      best = i;
      best_delta = d;
    }
  }
  return best;
}

template <Region Shape>
struct CellWalk {
  // Owner of the last sample before the walk enters the target's cell; the
  // target itself when p already lies in that cell.
  Shape last;
  // First sample owned by the target.
  Point2 transition;
  // Times the ownership left the target's cell after first entering it.
  int alternations = 0;
};

// Walks from p towards the center of `target` in steps of `step` times the
// segment length. Throws WALK_AMBIGUOUS when the sampled ownership leaves the
// target cell more than `max_alternations` times after entering it; cells are
// star-shaped around their sites, so such exits only come from undersampling.
template <Region Shape>
CellWalk<Shape> voronoi_cell_walk(Point2 p, const Shape& target, std::span<const Shape> centers,
                                  double step = kDefaultWalkStep, int max_alternations = 0) {
  if (!(step > 0.0) || step > 1.0) {
    throw Error(ErrorCode::kInvalidInput, "walk step must lie in (0, 1]");
  }
  const auto samples = static_cast<std::size_t>(std::ceil(1.0 / step));
  std::optional<std::size_t> previous_owner;
  std::optional<CellWalk<Shape>> entered;
  int alternations = 0;
  bool inside = false;
  for (std::size_t i = 0; i <= samples; ++i) {
    const double t = std::min(1.0, static_cast<double>(i) * step);
    const Point2 q = p + t * (target.center - p);
    const std::size_t owner = voronoi_owner(q, centers);
    const bool is_target = centers[owner].id == target.id;
    if (is_target && !inside) {
      if (!entered) {
        entered = CellWalk<Shape>{previous_owner ? centers[*previous_owner] : target, q, 0};
      }
      inside = true;
    } else if (!is_target && inside) {
      ++alternations;
      inside = false;
    }
    previous_owner = owner;
  }
  if (!entered) {
    // The target's center always lies in its own cell unless it is contained
    // in another region.
    throw Error(ErrorCode::kWalkAmbiguous, "walk never entered the target cell");
  }
  if (alternations > max_alternations) {
    throw Error(ErrorCode::kWalkAmbiguous,
                std::to_string(alternations) + " ownership alternations along the walk");
  }
  entered->alternations = alternations;
  return *entered;
}

struct LocalityWitness {
  int point = 0;
  int blue = -1;  // index into LocalityGraph::blue
  int red = -1;   // index into LocalityGraph::red
  // Both regions contain the point and the pair is bichromatic.
  bool valid = false;
};

template <Region Shape>
struct LocalityGraph {
  std::vector<Shape> blue;
  std::vector<Shape> red;
  // (blue index, red index), sorted and unique.
  std::vector<Edge> edges;
  std::vector<LocalityWitness> witnesses;
  // Walks that ended in a cell of the same color as their target. Such pairs
  // are never recorded as edges.
  int monochromatic_walks = 0;

  int vertex_count() const { return static_cast<int>(blue.size() + red.size()); }

  // Every point has a valid witness whose pair is an edge.
  bool locality_condition_holds() const {
    for (const LocalityWitness& w : witnesses) {
      if (!w.valid) return false;
      if (!std::binary_search(edges.begin(), edges.end(), Edge{w.blue, w.red})) return false;
    }
    return true;
  }
};

// Builds the sampled locality graph between a blue and a red solution for
// the points P. For each p, let o own p; the nearest center y of the other
// color is walked to, and the last cell c before cell(y) gives the edge
// (c, y). When the sampling is faithful, c has o's color and contains p.
//
// Requires that both B and R cover P and share no ids.
template <Region Shape>
LocalityGraph<Shape> build_locality_graph(std::span<const Shape> blue,
                                          std::span<const Shape> red,
                                          std::span<const Point2> points,
                                          double step = kDefaultWalkStep,
                                          int max_alternations = 0) {
  LocalityGraph<Shape> graph;
  graph.blue.assign(blue.begin(), blue.end());
  graph.red.assign(red.begin(), red.end());
  std::set<int> blue_ids;
  for (const Shape& b : blue) blue_ids.insert(b.id);
  for (const Shape& r : red) {
    if (blue_ids.count(r.id)) {
      throw Error(ErrorCode::kInvalidInput, "blue and red solutions share id " +
                                                std::to_string(r.id));
    }
  }
  if (points.empty()) return graph;
  if (blue.empty() || red.empty()) {
    throw Error(ErrorCode::kInvalidInput, "both solutions must cover the points");
  }
  std::vector<Shape> all(blue.begin(), blue.end());
  all.insert(all.end(), red.begin(), red.end());
  const std::span<const Shape> centers(all);
  auto index_of = [&](int id, bool want_blue) -> int {
    const auto& side = want_blue ? graph.blue : graph.red;
    for (std::size_t i = 0; i < side.size(); ++i) {
      if (side[i].id == id) return static_cast<int>(i);
    }
    return -1;
  };

  std::set<Edge> edges;
  for (std::size_t pi = 0; pi < points.size(); ++pi) {
    const Point2 p = points[pi];
    const bool owner_blue = voronoi_owner(p, centers) < blue.size();
    const std::span<const Shape> other = owner_blue ? red : blue;
    const Shape& target = other[voronoi_owner(p, other)];
    const CellWalk<Shape> walk = voronoi_cell_walk(p, target, centers, step, max_alternations);
    LocalityWitness w;
    w.point = static_cast<int>(pi);
    const bool last_blue = blue_ids.count(walk.last.id) > 0;
    const bool target_blue = !owner_blue;
    if (walk.last.id == target.id || last_blue == target_blue) {
      if (walk.last.id != target.id) ++graph.monochromatic_walks;
    } else {
      const Shape& b = target_blue ? target : walk.last;
      const Shape& r = target_blue ? walk.last : target;
      w.blue = index_of(b.id, true);
      w.red = index_of(r.id, false);
      w.valid = contains(b, p) && contains(r, p);
      edges.insert({w.blue, w.red});
    }
    graph.witnesses.push_back(w);
  }
  graph.edges.assign(edges.begin(), edges.end());
  return graph;
}

template <Region Shape>
LocalityGraph<Shape> build_locality_graph(const std::vector<Shape>& blue,
                                          const std::vector<Shape>& red,
                                          const std::vector<Point2>& points,
                                          double step = kDefaultWalkStep) {
  return build_locality_graph(std::span<const Shape>(blue), std::span<const Shape>(red),
                              std::span<const Point2>(points), step);
}

// Necessary condition for a planar bipartite graph: |E| <= 2|V| - 4.
template <Region Shape>
bool check_planarity_bound(const LocalityGraph<Shape>& g) {
  const int v = g.vertex_count();
  if (v < 3) return true;
  return static_cast<int>(g.edges.size()) <= 2 * v - 4;
}

struct ShallownessReport {
  int depth = 0;
  bool ok = true;
};

// Depth of B ∪ R (objects shared by id counted once) against the 2l bound.
template <Region Shape>
ShallownessReport union_shallowness(std::span<const Shape> blue, std::span<const Shape> red,
                                    int l) {
  std::vector<Shape> merged(blue.begin(), blue.end());
  std::set<int> ids;
  for (const Shape& b : blue) ids.insert(b.id);
  for (const Shape& r : red) {
    if (ids.insert(r.id).second) merged.push_back(r);
  }
  const int depth = max_depth(merged);
  return {depth, depth <= 2 * l};
}

}  // namespace geols

#endif  // GEOLS_DIAGNOSTICS_HPP_
