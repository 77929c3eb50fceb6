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

// Planar primitives shared by every problem plugin: points, L2 disks and
// L-infinity squares, arrangement depth, circumscribed disks, and visibility on
// x-monotone terrains.
//
// All predicates use closed containment with an absolute tolerance of
// kTolerance. Degenerate inputs (collinear triples, coincident points) are
// reported to the caller rather than perturbed.

#ifndef GEOLS_GEOM_HPP_
#define GEOLS_GEOM_HPP_

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geols/error.hpp"

namespace geols {

inline constexpr double kTolerance = 1e-9;
inline constexpr double kDegenerateEps = 1e-12;

enum class Metric { kL2, kLinf };

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }

inline double Cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

inline bool IsFinite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline double dist(Point2 p, Point2 q, Metric metric = Metric::kL2) {
  const double dx = std::abs(p.x - q.x);
  const double dy = std::abs(p.y - q.y);
  return metric == Metric::kL2 ? std::hypot(dx, dy) : std::max(dx, dy);
}

// Closed Euclidean ball.
struct Disk {
  static constexpr Metric kMetric = Metric::kL2;

  Point2 center;
  double radius = 0.0;
  int id = 0;

  double extent() const { return radius; }
  friend bool operator==(const Disk&, const Disk&) = default;
};

// Closed axis-parallel square, i.e. an L-infinity ball of radius half_side.
struct Square {
  static constexpr Metric kMetric = Metric::kLinf;

  Point2 center;
  double half_side = 0.0;
  int id = 0;

  double extent() const { return half_side; }
  double left() const { return center.x - half_side; }
  double right() const { return center.x + half_side; }
  double bottom() const { return center.y - half_side; }
  double top() const { return center.y + half_side; }
  friend bool operator==(const Square&, const Square&) = default;
};

// A ball under a fixed metric: Disk or Square. Both are aggregate-constructible
// as Shape{center, extent, id}.
template <class T>
concept Region = requires(const T& r) {
  { T::kMetric } -> std::convertible_to<Metric>;
  { r.center } -> std::convertible_to<Point2>;
  { r.extent() } -> std::convertible_to<double>;
  { r.id } -> std::convertible_to<int>;
};

template <Region Shape>
Shape MakeRegion(Point2 center, double extent, int id) {
  return Shape{center, extent, id};
}

// d(p, c) - r_c. Non-positive exactly when p is in the closed region.
template <Region Shape>
double weighted_dist(Point2 p, const Shape& region) {
  return dist(p, region.center, Shape::kMetric) - region.extent();
}

template <Region Shape>
bool contains(const Shape& region, Point2 p) {
  return weighted_dist(p, region) <= kTolerance;
}

template <Region Shape>
bool regions_intersect(const Shape& a, const Shape& b) {
  return dist(a.center, b.center, Shape::kMetric) <=
         a.extent() + b.extent() + kTolerance;
}

// True when `inner` lies inside the closed region `outer`.
template <Region Shape>
bool region_contains(const Shape& outer, const Shape& inner) {
  return dist(outer.center, inner.center, Shape::kMetric) + inner.extent() <=
         outer.extent() + kTolerance;
}

template <Region Shape>
int depth_at(Point2 p, std::span<const Shape> objects) {
  int depth = 0;
  for (const Shape& o : objects) depth += contains(o, p) ? 1 : 0;
  return depth;
}

namespace internal {

// Boundary intersection points of two circles. Near-tangent pairs within the
// tolerance report the single touching point.
inline void AppendCircleIntersections(const Disk& a, const Disk& b,
                                      std::vector<Point2>& out) {
  const Point2 delta = b.center - a.center;
  const double d = std::hypot(delta.x, delta.y);
  if (d <= kDegenerateEps) return;
  if (d > a.radius + b.radius + kTolerance) return;
  if (d < std::abs(a.radius - b.radius) - kTolerance) return;
  const double along = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, a.radius * a.radius - along * along));
  const Point2 u{delta.x / d, delta.y / d};
  const Point2 base = a.center + along * u;
  const Point2 normal{-u.y, u.x};
  out.push_back(base + h * normal);
  if (h > 0.0) out.push_back(base - h * normal);
}

// Corners of the intersection rectangle of two squares (a == b gives the
// square's own corners).
inline void AppendRectangleCorners(const Square& a, const Square& b,
                                   std::vector<Point2>& out) {
  const double lo_x = std::max(a.left(), b.left());
  const double hi_x = std::min(a.right(), b.right());
  const double lo_y = std::max(a.bottom(), b.bottom());
  const double hi_y = std::min(a.top(), b.top());
  if (lo_x > hi_x + kTolerance || lo_y > hi_y + kTolerance) return;
  out.push_back({lo_x, lo_y});
  out.push_back({lo_x, hi_y});
  out.push_back({hi_x, lo_y});
  out.push_back({hi_x, hi_y});
}

}  // namespace internal

// Points where the depth of the arrangement of {a, b} can be attained:
// the pairwise boundary intersections (disks) or intersection-rectangle
// corners (squares). Centers are added separately by callers.
template <Region Shape>
std::vector<Point2> pair_depth_candidates(const Shape& a, const Shape& b) {
  std::vector<Point2> out;
  if constexpr (std::same_as<Shape, Disk>) {
    internal::AppendCircleIntersections(a, b, out);
  } else {
    internal::AppendRectangleCorners(a, b, out);
  }
  return out;
}

// Maximum depth over the plane. Evaluated at every object center and every
// pairwise boundary-intersection point: the closure of a deepest face either
// has an arrangement vertex on it, which is such a point, or is bounded by a
// single boundary curve whose center lies in the face.
template <Region Shape>
int max_depth(std::span<const Shape> objects) {
  int best = 0;
  for (const Shape& o : objects) best = std::max(best, depth_at(o.center, objects));
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const std::size_t first_j = std::same_as<Shape, Square> ? i : i + 1;
    for (std::size_t j = first_j; j < objects.size(); ++j) {
      for (Point2 p : pair_depth_candidates(objects[i], objects[j])) {
        best = std::max(best, depth_at(p, objects));
      }
    }
  }
  return best;
}

template <Region Shape>
int max_depth(const std::vector<Shape>& objects) {
  return max_depth(std::span<const Shape>(objects));
}

// The disk with p1, p2, p3 on its boundary; nullopt for a collinear triple.
inline std::optional<Disk> circumdisk(Point2 p1, Point2 p2, Point2 p3) {
  const Point2 b = p2 - p1;
  const Point2 c = p3 - p1;
  const double det = 2.0 * Cross(b, c);
  if (std::abs(det) < kDegenerateEps) return std::nullopt;
  const double b2 = b.x * b.x + b.y * b.y;
  const double c2 = c.x * c.x + c.y * c.y;
  const Point2 offset{(c.y * b2 - b.y * c2) / det, (b.x * c2 - c.x * b2) / det};
  return Disk{p1 + offset, std::hypot(offset.x, offset.y), 0};
}

inline Disk diameter_disk(Point2 p1, Point2 p2) {
  const double d = dist(p1, p2);
  if (d <= kDegenerateEps) {
    throw Error(ErrorCode::kInvalidInput, "diameter_disk of coincident points");
  }
  return Disk{0.5 * (p1 + p2), 0.5 * d, 0};
}

// An x-monotone polygonal chain.
class TerrainChain {
 public:
  TerrainChain() = default;

  explicit TerrainChain(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) {
      throw Error(ErrorCode::kInvalidInput, "terrain needs at least 2 vertices");
    }
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (!IsFinite(vertices_[i])) {
        throw Error(ErrorCode::kInvalidInput, "terrain vertex is not finite");
      }
      if (i > 0 && !(vertices_[i].x > vertices_[i - 1].x)) {
        throw Error(ErrorCode::kInvalidInput,
                    "terrain x-coordinates must be strictly increasing");
      }
    }
  }

  const std::vector<Point2>& vertices() const { return vertices_; }
  double min_x() const { return vertices_.front().x; }
  double max_x() const { return vertices_.back().x; }

  // Height of the chain above x; nullopt outside [min_x, max_x].
  std::optional<double> height_at(double x) const {
    if (vertices_.empty() || x < min_x() || x > max_x()) return std::nullopt;
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), x,
                               [](Point2 v, double value) { return v.x < value; });
    if (it == vertices_.begin()) return it->y;
    const Point2 hi = *it;
    const Point2 lo = *(it - 1);
    const double t = (x - lo.x) / (hi.x - lo.x);
    return lo.y + t * (hi.y - lo.y);
  }

  Point2 point_at(double x) const {
    const auto h = height_at(x);
    if (!h) throw Error(ErrorCode::kInvalidInput, "x outside the terrain span");
    return {x, *h};
  }

  bool on_chain(Point2 p) const {
    const auto h = height_at(p.x);
    return h && std::abs(*h - p.y) <= kTolerance;
  }

 private:
  std::vector<Point2> vertices_;
};

// Whether a guard at g with sight range `range` sees x across terrain T. The
// difference between the segment and the chain is piecewise linear with
// breakpoints at the chain vertices, so checking the vertices strictly
// between g and x is exact. Grazing a vertex does not block.
inline bool terrain_sees(Point2 g, Point2 x, double range, const TerrainChain& terrain) {
  if (!terrain.on_chain(g) || !terrain.on_chain(x)) {
    throw Error(ErrorCode::kInvalidInput, "guard or target not on the terrain");
  }
  if (dist(g, x) > range + kTolerance) return false;
  Point2 left = g;
  Point2 right = x;
  if (left.x > right.x) std::swap(left, right);
  const double span = right.x - left.x;
  if (span <= 0.0) return true;
  for (const Point2& v : terrain.vertices()) {
    if (v.x <= left.x || v.x >= right.x) continue;
    const double segment_y = left.y + (right.y - left.y) * (v.x - left.x) / span;
    if (v.y > segment_y + kTolerance) return false;
  }
  return true;
}

using Edge = std::pair<int, int>;

// Unit disk graph edges: unordered pairs (i < j) at L2 distance <= threshold.
inline std::vector<Edge> unit_disk_edges(std::span<const Point2> points, double threshold) {
  if (!(threshold > 0.0)) {
    throw Error(ErrorCode::kInvalidInput, "unit disk threshold must be positive");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (dist(points[i], points[j]) <= threshold + kTolerance) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return edges;
}

}  // namespace geols

#endif  // GEOLS_GEOM_HPP_
