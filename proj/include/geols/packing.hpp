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

// Packing plugins for the maximization engine: the maximum l-shallow subset
// of disks or squares, and the maximum triangle matching in a unit disk graph.

#ifndef GEOLS_PACKING_HPP_
#define GEOLS_PACKING_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "geols/engine.hpp"
#include "geols/error.hpp"
#include "geols/geom.hpp"

namespace geols {

template <Region Shape>
struct ShallowSetInstance {
  std::vector<Shape> objects;
  int l = 1;

  void Validate() const {
    if (l < 1) throw Error(ErrorCode::kInvalidInput, "shallowness l must be >= 1");
    std::set<int> ids;
    for (const Shape& o : objects) {
      if (!IsFinite(o.center) || !std::isfinite(o.extent()) || o.extent() < 0.0) {
        throw Error(ErrorCode::kInvalidInput, "object with invalid geometry");
      }
      if (!ids.insert(o.id).second) {
        throw Error(ErrorCode::kInvalidInput, "duplicate object id " + std::to_string(o.id));
      }
    }
  }
};

template <Region Shape>
std::vector<Shape> SelectObjects(std::span<const Shape> objects, std::span<const int> s) {
  std::vector<Shape> out;
  out.reserve(s.size());
  for (int i : s) out.push_back(objects[static_cast<std::size_t>(i)]);
  return out;
}

template <Region Shape>
bool shallow_feasible(const ShallowSetInstance<Shape>& inst, std::span<const int> s) {
  const auto selected = SelectObjects(std::span<const Shape>(inst.objects), s);
  return max_depth(selected) <= inst.l;
}

// Engine adapter for the l-shallow subset problem. The depth candidate points
// of the whole ground set are computed once; the depth of a subset S is the
// maximum over candidates generated by members of S, which is exactly what
// max_depth evaluates on S.
template <Region Shape>
class ShallowSetProblem {
 public:
  explicit ShallowSetProblem(ShallowSetInstance<Shape> inst) : inst_(std::move(inst)) {
    inst_.Validate();
    const auto& objs = inst_.objects;
    auto add_probe = [&](Point2 p, int g1, int g2) {
      Probe probe{g1, g2, {}};
      for (std::size_t i = 0; i < objs.size(); ++i) {
        if (contains(objs[i], p)) probe.inside.push_back(static_cast<int>(i));
      }
      probes_.push_back(std::move(probe));
    };
    for (std::size_t i = 0; i < objs.size(); ++i) {
      const int gi = static_cast<int>(i);
      add_probe(objs[i].center, gi, gi);
      const std::size_t first_j = std::same_as<Shape, Square> ? i : i + 1;
      for (std::size_t j = first_j; j < objs.size(); ++j) {
        for (Point2 p : pair_depth_candidates(objs[i], objs[j])) {
          add_probe(p, gi, static_cast<int>(j));
        }
      }
    }
  }

  int ground_size() const { return static_cast<int>(inst_.objects.size()); }
  Direction direction() const { return Direction::kMaximize; }
  bool monotone() const { return true; }
  const ShallowSetInstance<Shape>& instance() const { return inst_; }

  bool is_feasible(std::span<const int> s) const {
    std::vector<char> member(inst_.objects.size(), 0);
    for (int i : s) member[static_cast<std::size_t>(i)] = 1;
    for (const Probe& probe : probes_) {
      if (!member[static_cast<std::size_t>(probe.g1)] ||
          !member[static_cast<std::size_t>(probe.g2)]) {
        continue;
      }
      int depth = 0;
      for (int i : probe.inside) depth += member[static_cast<std::size_t>(i)];
      if (depth > inst_.l) return false;
    }
    return true;
  }

  // Objects i and j overlap; used as the optional neighborhood filter.
  bool adjacent(int i, int j) const {
    return regions_intersect(inst_.objects[static_cast<std::size_t>(i)],
                             inst_.objects[static_cast<std::size_t>(j)]);
  }

 private:
  struct Probe {
    int g1;
    int g2;
    std::vector<int> inside;
  };

  ShallowSetInstance<Shape> inst_;
  std::vector<Probe> probes_;
};

// Maximum independent set over an explicit graph. Serves as the l = 1
// reference for the shallow-set problem.
class IndependentSetProblem {
 public:
  IndependentSetProblem(int n, std::span<const Edge> edges)
      : n_(n), adjacency_(static_cast<std::size_t>(n)) {
    for (const auto& [u, v] : edges) {
      adjacency_[static_cast<std::size_t>(u)].push_back(v);
      adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
  }

  int ground_size() const { return n_; }
  Direction direction() const { return Direction::kMaximize; }
  bool monotone() const { return true; }

  bool is_feasible(std::span<const int> s) const {
    std::vector<char> member(static_cast<std::size_t>(n_), 0);
    for (int i : s) member[static_cast<std::size_t>(i)] = 1;
    for (int u : s) {
      for (int v : adjacency_[static_cast<std::size_t>(u)]) {
        if (member[static_cast<std::size_t>(v)]) return false;
      }
    }
    return true;
  }

 private:
  int n_;
  std::vector<std::vector<int>> adjacency_;
};

template <Region Shape>
std::vector<Edge> intersection_graph_edges(std::span<const Shape> objects) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t j = i + 1; j < objects.size(); ++j) {
      if (regions_intersect(objects[i], objects[j])) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return edges;
}

// ---------------------------------------------------------------------------
// Triangle matching

struct Triangle {
  int a = 0;
  int b = 0;
  int c = 0;
  // Centroid; strictly interior for a non-degenerate triangle.
  Point2 rep;

  bool shares_vertex(const Triangle& o) const {
    for (int u : {a, b, c}) {
      if (u == o.a || u == o.b || u == o.c) return true;
    }
    return false;
  }
};

struct TriangleEnumeration {
  std::vector<Triangle> triangles;
  // Collinear triples whose edges all satisfy the threshold. They have no
  // interior point and are left out of the ground set.
  int degenerate = 0;
};

inline TriangleEnumeration enumerate_triangles(std::span<const Point2> points,
                                               double threshold) {
  const auto edges = unit_disk_edges(points, threshold);
  const std::size_t n = points.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& [u, v] : edges) {
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
  }
  TriangleEnumeration out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!adj[a][b]) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!adj[a][c] || !adj[b][c]) continue;
        const Point2 pa = points[a], pb = points[b], pc = points[c];
        if (std::abs(Cross(pb - pa, pc - pa)) < kDegenerateEps) {
          ++out.degenerate;
          continue;
        }
        const Point2 rep{(pa.x + pb.x + pc.x) / 3.0, (pa.y + pb.y + pc.y) / 3.0};
        out.triangles.push_back(
            {static_cast<int>(a), static_cast<int>(b), static_cast<int>(c), rep});
      }
    }
  }
  return out;
}

struct TriangleMatchingInstance {
  std::vector<Point2> points;
  double threshold = 1.0;
  std::vector<Triangle> triangles;
  int degenerate_triples = 0;
  // Depth of the radius threshold/2 disks around the points; the guarantee
  // assumes it is bounded by the declared l.
  int udg_depth = 0;
  std::optional<int> l;

  bool shallow_assumption_holds() const { return !l || udg_depth <= *l; }

  static TriangleMatchingInstance Create(std::vector<Point2> points, double threshold,
                                         std::optional<int> l = std::nullopt) {
    TriangleMatchingInstance inst;
    for (const Point2& p : points) {
      if (!IsFinite(p)) throw Error(ErrorCode::kInvalidInput, "point is not finite");
    }
    inst.points = std::move(points);
    inst.threshold = threshold;
    inst.l = l;
    auto enumeration = enumerate_triangles(inst.points, threshold);
    inst.triangles = std::move(enumeration.triangles);
    inst.degenerate_triples = enumeration.degenerate;
    std::vector<Disk> half_disks;
    for (std::size_t i = 0; i < inst.points.size(); ++i) {
      half_disks.push_back({inst.points[i], 0.5 * threshold, static_cast<int>(i)});
    }
    inst.udg_depth = max_depth(half_disks);
    return inst;
  }
};

inline bool matching_feasible(const TriangleMatchingInstance& inst, std::span<const int> s) {
  std::vector<char> used(inst.points.size(), 0);
  for (int t : s) {
    const Triangle& tri = inst.triangles[static_cast<std::size_t>(t)];
    for (int v : {tri.a, tri.b, tri.c}) {
      if (used[static_cast<std::size_t>(v)]) return false;
      used[static_cast<std::size_t>(v)] = 1;
    }
  }
  return true;
}

class TriangleMatchingProblem {
 public:
  explicit TriangleMatchingProblem(TriangleMatchingInstance inst) : inst_(std::move(inst)) {}

  int ground_size() const { return static_cast<int>(inst_.triangles.size()); }
  Direction direction() const { return Direction::kMaximize; }
  bool monotone() const { return true; }
  bool is_feasible(std::span<const int> s) const { return matching_feasible(inst_, s); }
  const TriangleMatchingInstance& instance() const { return inst_; }

  bool adjacent(int i, int j) const {
    return inst_.triangles[static_cast<std::size_t>(i)].shares_vertex(
        inst_.triangles[static_cast<std::size_t>(j)]);
  }

 private:
  TriangleMatchingInstance inst_;
};

// Blue-red pairs whose representatives are within twice the UDG threshold.
// Every vertex-sharing pair qualifies: each representative is within one
// threshold of each of its triangle's corners.
inline std::vector<Edge> triangle_locality_edges(std::span<const Triangle> blue,
                                                 std::span<const Triangle> red,
                                                 double threshold = 1.0) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < blue.size(); ++i) {
    for (std::size_t j = 0; j < red.size(); ++j) {
      if (dist(blue[i].rep, red[j].rep) <= 2.0 * threshold + kTolerance) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return edges;
}

}  // namespace geols

#endif  // GEOLS_PACKING_HPP_
