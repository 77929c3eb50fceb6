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

// Covering plugins for the minimization engine: discrete coverage of points
// by disks or squares, red-blue class cover, and terrain guarding with
// limited sight range. All three reduce to set cover over precomputed
// coverage lists once their geometry is evaluated.

#ifndef GEOLS_COVERING_HPP_
#define GEOLS_COVERING_HPP_

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "geols/engine.hpp"
#include "geols/error.hpp"
#include "geols/geom.hpp"

namespace geols {

// Set cover over explicit coverage lists: element e is covered by ground
// element i iff e appears in coverage[i].
class CoverageProblem {
 public:
  CoverageProblem() = default;
  CoverageProblem(int n_elements, std::vector<std::vector<int>> coverage)
      : n_elements_(n_elements), coverage_(std::move(coverage)) {}

  int ground_size() const { return static_cast<int>(coverage_.size()); }
  int element_count() const { return n_elements_; }
  Direction direction() const { return Direction::kMinimize; }
  bool monotone() const { return true; }
  const std::vector<std::vector<int>>& coverage() const { return coverage_; }

  bool is_feasible(std::span<const int> s) const {
    std::vector<char> covered(static_cast<std::size_t>(n_elements_), 0);
    int remaining = n_elements_;
    for (int i : s) {
      for (int e : coverage_[static_cast<std::size_t>(i)]) {
        if (!covered[static_cast<std::size_t>(e)]) {
          covered[static_cast<std::size_t>(e)] = 1;
          if (--remaining == 0) return true;
        }
      }
    }
    return remaining == 0;
  }

  bool adjacent(int i, int j) const {
    const auto& a = coverage_[static_cast<std::size_t>(i)];
    const auto& b = coverage_[static_cast<std::size_t>(j)];
    return std::find_first_of(a.begin(), a.end(), b.begin(), b.end()) != a.end();
  }

 private:
  int n_elements_ = 0;
  std::vector<std::vector<int>> coverage_;
};

// Keeps, for each distinct coverage list, only those not strictly contained
// in another list; duplicates keep the lowest index. The reduced problem has
// the same optimum value. Returns the kept original indices.
inline std::vector<int> maximal_coverage_sets(const CoverageProblem& problem) {
  const auto& cov = problem.coverage();
  std::vector<std::vector<int>> sorted(cov.size());
  for (std::size_t i = 0; i < cov.size(); ++i) {
    sorted[i] = cov[i];
    std::sort(sorted[i].begin(), sorted[i].end());
  }
  std::vector<int> kept;
  for (std::size_t i = 0; i < cov.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < cov.size() && !dominated; ++j) {
      if (i == j) continue;
      const bool subset = std::includes(sorted[j].begin(), sorted[j].end(),
                                        sorted[i].begin(), sorted[i].end());
      if (!subset) continue;
      dominated = sorted[i].size() < sorted[j].size() || j < i;
    }
    if (!dominated) kept.push_back(static_cast<int>(i));
  }
  return kept;
}

inline CoverageProblem restrict_coverage(const CoverageProblem& problem,
                                         std::span<const int> keep) {
  std::vector<std::vector<int>> cov;
  for (int i : keep) cov.push_back(problem.coverage()[static_cast<std::size_t>(i)]);
  return CoverageProblem(problem.element_count(), std::move(cov));
}

// ---------------------------------------------------------------------------
// Discrete coverage of points

// Drops every object contained in another one. Identical objects keep the
// one with the lower id. Order of survivors is preserved.
template <Region Shape>
std::vector<Shape> preprocess_containment(std::span<const Shape> objects) {
  std::vector<Shape> kept;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < objects.size() && !dominated; ++j) {
      if (i == j || !region_contains(objects[j], objects[i])) continue;
      const bool mutual = region_contains(objects[i], objects[j]);
      dominated = !mutual || objects[j].id < objects[i].id ||
                  (objects[j].id == objects[i].id && j < i);
    }
    if (!dominated) kept.push_back(objects[i]);
  }
  return kept;
}

template <Region Shape>
std::vector<Shape> preprocess_containment(const std::vector<Shape>& objects) {
  return preprocess_containment(std::span<const Shape>(objects));
}

template <Region Shape>
struct CoverInstance {
  static constexpr Metric kMetric = Shape::kMetric;

  std::vector<Shape> objects;
  std::vector<Point2> points;

  // Runs containment preprocessing and checks that every point is covered.
  static CoverInstance Create(std::span<const Shape> objects, std::vector<Point2> points) {
    CoverInstance inst;
    inst.objects = preprocess_containment(objects);
    inst.points = std::move(points);
    for (std::size_t p = 0; p < inst.points.size(); ++p) {
      const bool covered = std::any_of(inst.objects.begin(), inst.objects.end(),
                                       [&](const Shape& o) { return contains(o, inst.points[p]); });
      if (!covered) {
        throw Error(ErrorCode::kInvalidInput,
                    "point " + std::to_string(p) + " is not covered by any object");
      }
    }
    return inst;
  }

  static CoverInstance Create(const std::vector<Shape>& objects, std::vector<Point2> points) {
    return Create(std::span<const Shape>(objects), std::move(points));
  }
};

template <Region Shape>
bool cover_feasible(const CoverInstance<Shape>& inst, std::span<const int> s) {
  for (const Point2& p : inst.points) {
    const bool covered = std::any_of(s.begin(), s.end(), [&](int i) {
      return contains(inst.objects[static_cast<std::size_t>(i)], p);
    });
    if (!covered) return false;
  }
  return true;
}

template <Region Shape>
CoverageProblem make_cover_problem(std::span<const Shape> objects,
                                   std::span<const Point2> points) {
  std::vector<std::vector<int>> coverage(objects.size());
  for (std::size_t i = 0; i < objects.size(); ++i) {
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (contains(objects[i], points[p])) coverage[i].push_back(static_cast<int>(p));
    }
  }
  return CoverageProblem(static_cast<int>(points.size()), std::move(coverage));
}

template <Region Shape>
CoverageProblem make_cover_problem(const CoverInstance<Shape>& inst) {
  return make_cover_problem(std::span<const Shape>(inst.objects),
                            std::span<const Point2>(inst.points));
}

// ---------------------------------------------------------------------------
// Class cover

struct ClassCoverInstance {
  std::vector<Point2> blue;
  std::vector<Point2> red;

  void Validate() const {
    if (blue.empty()) throw Error(ErrorCode::kInvalidInput, "class cover needs blue points");
    for (const Point2& b : blue) {
      if (!IsFinite(b)) throw Error(ErrorCode::kInvalidInput, "blue point is not finite");
      for (const Point2& r : red) {
        if (b == r) throw Error(ErrorCode::kInvalidInput, "a point is both blue and red");
      }
    }
    for (const Point2& r : red) {
      if (!IsFinite(r)) throw Error(ErrorCode::kInvalidInput, "red point is not finite");
    }
  }
};

// A candidate is legal when its closed region holds no red point.
template <Region Shape>
bool is_legal(const Shape& region, std::span<const Point2> red) {
  return std::none_of(red.begin(), red.end(), [&](Point2 r) { return contains(region, r); });
}

namespace internal {

template <Region Shape>
struct RegionKeyLess {
  bool operator()(const Shape& a, const Shape& b) const {
    auto q = [](double v) { return std::llround(v * 1e9); };
    return std::make_tuple(q(a.center.x), q(a.center.y), q(a.extent())) <
           std::make_tuple(q(b.center.x), q(b.center.y), q(b.extent()));
  }
};

template <Region Shape>
std::vector<Shape> FinalizeCandidates(std::vector<Shape> raw, const ClassCoverInstance& inst) {
  std::set<Shape, RegionKeyLess<Shape>> seen;
  std::vector<Shape> out;
  for (Shape& c : raw) {
    if (!is_legal(c, std::span<const Point2>(inst.red))) continue;
    const bool any_blue = std::any_of(inst.blue.begin(), inst.blue.end(),
                                      [&](Point2 b) { return contains(c, b); });
    if (!any_blue) continue;
    if (!seen.insert(c).second) continue;
    c.id = static_cast<int>(out.size());
    out.push_back(c);
  }
  for (std::size_t b = 0; b < inst.blue.size(); ++b) {
    const bool covered = std::any_of(out.begin(), out.end(),
                                     [&](const Shape& c) { return contains(c, inst.blue[b]); });
    if (!covered) {
      throw Error(ErrorCode::kEmptyCandidates,
                  "blue point " + std::to_string(b) + " lies in no legal candidate");
    }
  }
  return out;
}

}  // namespace internal

// Candidate regions for class cover, deduplicated, legal, and covering at
// least one blue point.
//
// Disks: circumdisks of non-collinear triples and diameter disks of pairs
// over blue and red points, plus a zero-radius disk at every blue point.
//
// Squares: side s from {|dx|, |dy| of every point pair} and 0; left edge at
// p.x or p.x - s and bottom edge at p.y or p.y - s for every point p. A legal
// square can be shrunk to the bounding square of its blue points pinned at
// their minimum x and y without gaining red points, so this family loses
// nothing.
namespace internal {

// Disks through blue p and q form a pencil with centers m + t*n. Every other
// point z enters or leaves the disk at one threshold t, so the thresholds cut
// the t-line into intervals of constant contents. Pair and triple disks only
// sample the thresholds themselves; a legal disk whose contents sit strictly
// between two thresholds (one of them red) is missed, because the threshold
// disks put that red point on the boundary. One representative per open
// interval closes the gap: any legal disk shrinks to a legal disk with two of
// its blue points on the boundary, which lies at a blue threshold or inside
// an interval.
inline void AddMidpoints(std::set<double>& values) {
  std::vector<double> mids;
  for (auto it = values.begin(); it != values.end() && std::next(it) != values.end(); ++it) {
    if (*std::next(it) - *it > kTolerance) mids.push_back(0.5 * (*it + *std::next(it)));
  }
  values.insert(mids.begin(), mids.end());
}

inline void AppendPencilRepresentatives(Point2 p, Point2 q, std::span<const Point2> pts,
                                        std::vector<Disk>& out) {
  const Point2 m = 0.5 * (p + q);
  const double len = dist(p, q);
  if (len <= kDegenerateEps) return;
  const Point2 n{-(q.y - p.y) / len, (q.x - p.x) / len};
  const double h2 = 0.25 * len * len;
  std::vector<double> thresholds;
  for (const Point2& z : pts) {
    const Point2 v = z - m;
    const double a = v.x * n.x + v.y * n.y;
    if (std::abs(a) <= kDegenerateEps) continue;
    thresholds.push_back(((v.x * v.x + v.y * v.y) - h2) / (2.0 * a));
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end(),
                               [](double a, double b) { return b - a <= kTolerance; }),
                   thresholds.end());
  std::vector<double> ts;
  if (thresholds.empty()) {
    ts.push_back(0.0);
  } else {
    ts.push_back(thresholds.front() - 1.0);
    ts.push_back(thresholds.back() + 1.0);
    for (std::size_t i = 0; i + 1 < thresholds.size(); ++i) {
      ts.push_back(0.5 * (thresholds[i] + thresholds[i + 1]));
    }
  }
  for (double t : ts) out.push_back(Disk{m + t * n, std::sqrt(h2 + t * t), 0});
}

}  // namespace internal

template <Region Shape>
std::vector<Shape> class_cover_candidates(const ClassCoverInstance& inst) {
  inst.Validate();
  std::vector<Point2> pts = inst.blue;
  pts.insert(pts.end(), inst.red.begin(), inst.red.end());
  std::vector<Shape> raw;
  if constexpr (std::same_as<Shape, Disk>) {
    for (const Point2& b : inst.blue) raw.push_back(Disk{b, 0.0, 0});
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (dist(pts[i], pts[j]) > kDegenerateEps) raw.push_back(diameter_disk(pts[i], pts[j]));
        for (std::size_t k = j + 1; k < pts.size(); ++k) {
          if (auto d = circumdisk(pts[i], pts[j], pts[k])) raw.push_back(*d);
        }
      }
    }
    for (std::size_t i = 0; i < inst.blue.size(); ++i) {
      for (std::size_t j = i + 1; j < inst.blue.size(); ++j) {
        internal::AppendPencilRepresentatives(inst.blue[i], inst.blue[j], pts, raw);
      }
    }
  } else {
    std::set<double> sides{0.0};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        sides.insert(std::abs(pts[i].x - pts[j].x));
        sides.insert(std::abs(pts[i].y - pts[j].y));
      }
    }
    for (double s : sides) {
      std::set<double> lefts;
      std::set<double> bottoms;
      for (const Point2& p : pts) {
        lefts.insert(p.x);
        lefts.insert(p.x - s);
        bottoms.insert(p.y);
        bottoms.insert(p.y - s);
      }
      // Sliding a square of side s along x, a point enters at left = p.x - s
      // and leaves after left = p.x. Between consecutive thresholds the
      // contents are constant, and no threshold square reproduces them when
      // both neighbours pin a red point to the boundary.
      internal::AddMidpoints(lefts);
      internal::AddMidpoints(bottoms);
      for (double x0 : lefts) {
        for (double y0 : bottoms) {
          raw.push_back(Square{{x0 + 0.5 * s, y0 + 0.5 * s}, 0.5 * s, 0});
        }
      }
    }
  }
  return internal::FinalizeCandidates(std::move(raw), inst);
}

template <Region Shape>
struct ClassCoverResult {
  // Candidate family after containment preprocessing; the ground set.
  std::vector<Shape> candidates;
  Solution solution;
  std::vector<Shape> chosen;
};

template <Region Shape>
CoverageProblem make_class_cover_problem(const ClassCoverInstance& inst,
                                         std::span<const Shape> candidates) {
  return make_cover_problem(candidates, std::span<const Point2>(inst.blue));
}

// Keeps the first candidate of every maximal blue-coverage set, then runs
// containment preprocessing on the survivors. The cover optimum is unchanged:
// any cover can trade each member for a kept candidate with a superset of its
// blue points. Identical sets are merged first so the quadratic dominance
// pass only sees distinct sets.
template <Region Shape>
std::vector<Shape> reduce_class_cover_candidates(std::span<const Shape> candidates,
                                                 std::span<const Point2> blue) {
  const CoverageProblem full = make_cover_problem(candidates, blue);
  std::map<std::vector<int>, int> seen;
  std::vector<int> distinct;
  for (int i = 0; i < full.ground_size(); ++i) {
    if (seen.emplace(full.coverage()[static_cast<std::size_t>(i)], i).second) {
      distinct.push_back(i);
    }
  }
  const CoverageProblem reduced = restrict_coverage(full, distinct);
  std::vector<Shape> kept;
  for (int j : maximal_coverage_sets(reduced)) {
    kept.push_back(candidates[static_cast<std::size_t>(distinct[static_cast<std::size_t>(j)])]);
  }
  return preprocess_containment(kept);
}

// Candidate family, reduction, then covering local search on the blue
// points.
template <Region Shape>
ClassCoverResult<Shape> solve_class_cover(const ClassCoverInstance& inst,
                                          const SearchConfig& cfg) {
  ClassCoverResult<Shape> result;
  const auto raw = class_cover_candidates<Shape>(inst);
  result.candidates = CoverInstance<Shape>::Create(
      reduce_class_cover_candidates(std::span<const Shape>(raw),
                                    std::span<const Point2>(inst.blue)),
      inst.blue).objects;
  const auto problem =
      make_class_cover_problem(inst, std::span<const Shape>(result.candidates));
  result.solution = local_search(problem, cfg);
  for (int i : result.solution.selected) {
    result.chosen.push_back(result.candidates[static_cast<std::size_t>(i)]);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Terrain guarding

struct Guard {
  Point2 position;
  double range = 0.0;
};

struct GuardingInstance {
  TerrainChain terrain;
  std::vector<Guard> guards;
  std::vector<Point2> targets;
  // coverage[g] lists the targets guard g sees within its range.
  std::vector<std::vector<int>> coverage;

  static GuardingInstance Create(TerrainChain terrain, std::vector<Guard> guards,
                                 std::vector<Point2> targets) {
    GuardingInstance inst{std::move(terrain), std::move(guards), std::move(targets), {}};
    for (const Guard& g : inst.guards) {
      if (!(g.range > 0.0) || !std::isfinite(g.range)) {
        throw Error(ErrorCode::kInvalidInput, "guard range must be positive and finite");
      }
    }
    inst.coverage.resize(inst.guards.size());
    std::vector<char> seen(inst.targets.size(), 0);
    for (std::size_t g = 0; g < inst.guards.size(); ++g) {
      for (std::size_t x = 0; x < inst.targets.size(); ++x) {
        if (terrain_sees(inst.guards[g].position, inst.targets[x], inst.guards[g].range,
                         inst.terrain)) {
          inst.coverage[g].push_back(static_cast<int>(x));
          seen[x] = 1;
        }
      }
    }
    for (std::size_t x = 0; x < inst.targets.size(); ++x) {
      if (!seen[x]) {
        throw Error(ErrorCode::kInvalidInput,
                    "target " + std::to_string(x) + " is seen by no guard");
      }
    }
    return inst;
  }

  std::vector<Disk> range_disks() const {
    std::vector<Disk> disks;
    for (std::size_t g = 0; g < guards.size(); ++g) {
      disks.push_back({guards[g].position, guards[g].range, static_cast<int>(g)});
    }
    return disks;
  }
};

inline bool guarding_feasible(const GuardingInstance& inst, std::span<const int> s) {
  std::vector<char> seen(inst.targets.size(), 0);
  for (int g : s) {
    for (int x : inst.coverage[static_cast<std::size_t>(g)]) seen[static_cast<std::size_t>(x)] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

inline CoverageProblem make_guarding_problem(const GuardingInstance& inst) {
  return CoverageProblem(static_cast<int>(inst.targets.size()), inst.coverage);
}

// Depth of the arrangement of the guards' range disks.
inline int guarding_depth_check(const GuardingInstance& inst) {
  return max_depth(inst.range_disks());
}

}  // namespace geols

#endif  // GEOLS_COVERING_HPP_
