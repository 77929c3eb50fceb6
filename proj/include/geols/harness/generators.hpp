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

// Seeded instance generators. Every generator is a deterministic function of
// its arguments and returns instances that satisfy their type invariants.

#ifndef GEOLS_HARNESS_GENERATORS_HPP_
#define GEOLS_HARNESS_GENERATORS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "geols/covering.hpp"
#include "geols/error.hpp"
#include "geols/geom.hpp"
#include "geols/harness/rng.hpp"
#include "geols/packing.hpp"

namespace geols {

inline constexpr int kDefaultMaxRejections = 10000;

namespace internal {

class RejectionCounter {
 public:
  RejectionCounter(int limit, std::string what) : limit_(limit), what_(std::move(what)) {}
  void Reject() {
    if (++consecutive_ > limit_) {
      throw Error(ErrorCode::kGenerationStall,
                  what_ + ": " + std::to_string(limit_) + " consecutive rejections");
    }
  }
  void Accept() { consecutive_ = 0; }

 private:
  int limit_;
  std::string what_;
  int consecutive_ = 0;
};

template <Region Shape>
Shape RandomRegion(SplitMix64& rng, double rmin, double rmax, double area, int id) {
  const Point2 c{rng.uniform(0.0, area), rng.uniform(0.0, area)};
  return Shape{c, rng.uniform(rmin, rmax), id};
}

template <Region Shape>
Point2 RandomPointIn(SplitMix64& rng, const Shape& region) {
  const double e = region.extent();
  while (true) {
    const Point2 p{region.center.x + rng.uniform(-e, e), region.center.y + rng.uniform(-e, e)};
    if (contains(region, p)) return p;
  }
}

}  // namespace internal

// n regions with centers uniform in [0, area]^2 and extents in [rmin, rmax].
template <Region Shape>
std::vector<Shape> gen_regions(int n, double rmin, double rmax, double area,
                               std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Shape> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(internal::RandomRegion<Shape>(rng, rmin, rmax, area, i));
  }
  return out;
}

// n regions whose arrangement depth stays <= l; a draw that would raise the
// depth above l is discarded and redrawn.
template <Region Shape>
std::vector<Shape> gen_shallow_regions(int n, int l, double rmin, double rmax, double area,
                                       std::uint64_t seed,
                                       int max_rejections = kDefaultMaxRejections) {
  if (n < 0 || l < 1) throw Error(ErrorCode::kInvalidInput, "need n >= 0 and l >= 1");
  SplitMix64 rng(seed);
  internal::RejectionCounter counter(max_rejections, "shallow region generation");
  std::vector<Shape> out;
  while (static_cast<int>(out.size()) < n) {
    out.push_back(internal::RandomRegion<Shape>(rng, rmin, rmax, area,
                                                static_cast<int>(out.size())));
    if (max_depth(out) > l) {
      out.pop_back();
      counter.Reject();
    } else {
      counter.Accept();
    }
  }
  return out;
}

inline std::vector<Disk> gen_shallow_disks(int n, int l, double rmin, double rmax, double area,
                                           std::uint64_t seed,
                                           int max_rejections = kDefaultMaxRejections) {
  return gen_shallow_regions<Disk>(n, l, rmin, rmax, area, seed, max_rejections);
}

// Containment-free regions and points drawn inside them, so every point is
// covered.
template <Region Shape>
CoverInstance<Shape> gen_cover_instance(int n_objects, int n_points, double rmin, double rmax,
                                        double area, std::uint64_t seed,
                                        int max_rejections = kDefaultMaxRejections) {
  SplitMix64 rng(seed);
  internal::RejectionCounter counter(max_rejections, "cover instance generation");
  std::vector<Shape> objects;
  while (static_cast<int>(objects.size()) < n_objects) {
    const Shape cand = internal::RandomRegion<Shape>(rng, rmin, rmax, area,
                                                     static_cast<int>(objects.size()));
    bool nested = false;
    for (const Shape& o : objects) {
      nested = nested || region_contains(o, cand) || region_contains(cand, o);
    }
    if (nested) {
      counter.Reject();
      continue;
    }
    counter.Accept();
    objects.push_back(cand);
  }
  std::vector<Point2> points;
  if (!objects.empty()) {
    for (int i = 0; i < n_points; ++i) {
      const auto& host = objects[static_cast<std::size_t>(rng.below(objects.size()))];
      points.push_back(internal::RandomPointIn(rng, host));
    }
  }
  return CoverInstance<Shape>::Create(objects, std::move(points));
}

// Distinct blue and red points in [0, area)^2. With `grid`, coordinates are
// integers in [0, area); otherwise points are real and no three are
// collinear.
inline ClassCoverInstance gen_class_cover(int n_blue, int n_red, double area, bool grid,
                                          std::uint64_t seed,
                                          int max_rejections = kDefaultMaxRejections) {
  SplitMix64 rng(seed);
  internal::RejectionCounter counter(max_rejections, "class cover generation");
  std::vector<Point2> all;
  const int total = n_blue + n_red;
  const auto side = static_cast<std::uint64_t>(std::max(1.0, std::floor(area)));
  while (static_cast<int>(all.size()) < total) {
    Point2 p;
    if (grid) {
      p = {static_cast<double>(rng.below(side)), static_cast<double>(rng.below(side))};
    } else {
      p = {rng.uniform(0.0, area), rng.uniform(0.0, area)};
    }
    bool bad = false;
    for (std::size_t i = 0; i < all.size() && !bad; ++i) {
      bad = dist(all[i], p) <= kTolerance;
      for (std::size_t j = i + 1; j < all.size() && !grid && !bad; ++j) {
        bad = std::abs(Cross(all[j] - all[i], p - all[i])) < 1e-6;
      }
    }
    if (bad) {
      counter.Reject();
      continue;
    }
    counter.Accept();
    all.push_back(p);
  }
  ClassCoverInstance inst;
  inst.blue.assign(all.begin(), all.begin() + n_blue);
  inst.red.assign(all.begin() + n_blue, all.end());
  inst.Validate();
  return inst;
}

// Terrain with vertices near x = 0, 1, ..., guards and targets at random
// positions on it. Targets no guard sees are redrawn.
inline GuardingInstance gen_terrain(int n_vertices, int n_guards, int n_targets, double rmin,
                                    double rmax, double height, std::uint64_t seed,
                                    int max_rejections = kDefaultMaxRejections) {
  if (n_vertices < 2) throw Error(ErrorCode::kInvalidInput, "terrain needs >= 2 vertices");
  SplitMix64 rng(seed);
  std::vector<Point2> vertices;
  for (int i = 0; i < n_vertices; ++i) {
    const double jitter = (i == 0 || i == n_vertices - 1) ? 0.0 : rng.uniform(-0.3, 0.3);
    vertices.push_back({static_cast<double>(i) + jitter, rng.uniform(0.0, height)});
  }
  TerrainChain terrain(vertices);
  std::vector<Guard> guards;
  for (int g = 0; g < n_guards; ++g) {
    const Point2 pos = terrain.point_at(rng.uniform(terrain.min_x(), terrain.max_x()));
    guards.push_back({pos, rng.uniform(rmin, rmax)});
  }
  internal::RejectionCounter counter(max_rejections, "terrain target generation");
  std::vector<Point2> targets;
  while (static_cast<int>(targets.size()) < n_targets) {
    const Point2 x = terrain.point_at(rng.uniform(terrain.min_x(), terrain.max_x()));
    bool seen = false;
    for (const Guard& g : guards) seen = seen || terrain_sees(g.position, x, g.range, terrain);
    if (!seen) {
      counter.Reject();
      continue;
    }
    counter.Accept();
    targets.push_back(x);
  }
  return GuardingInstance::Create(std::move(terrain), std::move(guards), std::move(targets));
}

inline TriangleMatchingInstance gen_triangle_instance(int n_points, double area,
                                                      double threshold, std::optional<int> l,
                                                      std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Point2> points;
  for (int i = 0; i < n_points; ++i) {
    points.push_back({rng.uniform(0.0, area), rng.uniform(0.0, area)});
  }
  return TriangleMatchingInstance::Create(std::move(points), threshold, l);
}

}  // namespace geols

#endif  // GEOLS_HARNESS_GENERATORS_HPP_
