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

// JSON instance and solution files.
//
// Instance:
//   {"kind": "shallow_set" | "triangle_matching" | "cover" | "class_cover" |
//            "terrain_guarding",
//    "metric": "L2" | "Linf",
//    "objects": [{"cx": .., "cy": .., "r": .., "id": ..}],   // id optional
//    "points": [[x, y]],     // cover points, blue points, targets, UDG points
//    "red": [[x, y]],        // class cover only
//    "terrain": [[x, y]],
//    "guards": [{"x": .., "y": .., "range": ..}],
//    "l": int, "threshold": real}
//
// Solution:
//   {"kind", "k", "initial": [..], "selected": [..], "value", "iterations",
//    "converged", "trace": [{"removed": [..], "added": [..]}],
//    "objects": [...]}  // geometry of the selected objects, when it has one

#ifndef GEOLS_HARNESS_INSTANCE_IO_HPP_
#define GEOLS_HARNESS_INSTANCE_IO_HPP_

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "geols/covering.hpp"
#include "geols/engine.hpp"
#include "geols/error.hpp"
#include "geols/geom.hpp"

namespace geols {

using nlohmann::json;

enum class ProblemKind { kShallowSet, kTriangleMatching, kCover, kClassCover, kTerrainGuarding };

inline std::string_view KindName(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::kShallowSet:
      return "shallow_set";
    case ProblemKind::kTriangleMatching:
      return "triangle_matching";
    case ProblemKind::kCover:
      return "cover";
    case ProblemKind::kClassCover:
      return "class_cover";
    case ProblemKind::kTerrainGuarding:
      return "terrain_guarding";
  }
  return "unknown";
}

inline ProblemKind ParseKind(std::string_view name) {
  for (ProblemKind k : {ProblemKind::kShallowSet, ProblemKind::kTriangleMatching,
                        ProblemKind::kCover, ProblemKind::kClassCover,
                        ProblemKind::kTerrainGuarding}) {
    if (KindName(k) == name) return k;
  }
  throw Error(ErrorCode::kInvalidInput, "unknown problem kind '" + std::string(name) + "'");
}

inline std::string_view MetricName(Metric m) { return m == Metric::kL2 ? "L2" : "Linf"; }

inline Metric ParseMetric(std::string_view name) {
  if (name == "L2") return Metric::kL2;
  if (name == "Linf") return Metric::kLinf;
  throw Error(ErrorCode::kInvalidInput, "unknown metric '" + std::string(name) + "'");
}

// Metric-neutral region record as stored on disk.
struct Ball {
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;
  int id = 0;
};

struct Instance {
  ProblemKind kind = ProblemKind::kCover;
  Metric metric = Metric::kL2;
  std::vector<Ball> objects;
  std::vector<Point2> points;
  std::vector<Point2> red;
  std::vector<Point2> terrain;
  std::vector<Guard> guards;
  std::optional<int> l;
  double threshold = 1.0;
};

template <Region Shape>
std::vector<Shape> ObjectsAs(std::span<const Ball> balls) {
  std::vector<Shape> out;
  for (const Ball& b : balls) out.push_back(Shape{{b.cx, b.cy}, b.r, b.id});
  return out;
}

template <Region Shape>
std::vector<Ball> ToBalls(std::span<const Shape> objects) {
  std::vector<Ball> out;
  for (const Shape& o : objects) out.push_back({o.center.x, o.center.y, o.extent(), o.id});
  return out;
}

namespace internal {

inline json PointsToJson(std::span<const Point2> pts) {
  json arr = json::array();
  for (const Point2& p : pts) arr.push_back({p.x, p.y});
  return arr;
}

inline std::vector<Point2> PointsFromJson(const json& j, std::string_view field) {
  std::vector<Point2> out;
  if (!j.contains(field)) return out;
  for (const json& p : j.at(field)) {
    if (!p.is_array() || p.size() != 2) {
      throw Error(ErrorCode::kInvalidInput, "'" + std::string(field) + "' entries must be [x, y]");
    }
    const Point2 pt{p[0].get<double>(), p[1].get<double>()};
    if (!IsFinite(pt)) throw Error(ErrorCode::kInvalidInput, "non-finite coordinate");
    out.push_back(pt);
  }
  return out;
}

inline json BallsToJson(std::span<const Ball> balls) {
  json arr = json::array();
  for (const Ball& b : balls) arr.push_back({{"cx", b.cx}, {"cy", b.cy}, {"r", b.r}, {"id", b.id}});
  return arr;
}

inline json IndexSetToJson(std::span<const int> s) { return json(std::vector<int>(s.begin(), s.end())); }

inline IndexSet IndexSetFromJson(const json& j) {
  IndexSet s = j.get<IndexSet>();
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw Error(ErrorCode::kInvalidInput, "index set has duplicates");
  }
  return s;
}

}  // namespace internal

inline json ToJson(const Instance& inst) {
  json j;
  j["kind"] = KindName(inst.kind);
  j["metric"] = MetricName(inst.metric);
  j["objects"] = internal::BallsToJson(inst.objects);
  j["points"] = internal::PointsToJson(inst.points);
  if (inst.kind == ProblemKind::kClassCover) j["red"] = internal::PointsToJson(inst.red);
  if (inst.kind == ProblemKind::kTerrainGuarding) {
    j["terrain"] = internal::PointsToJson(inst.terrain);
    json guards = json::array();
    for (const Guard& g : inst.guards) {
      guards.push_back({{"x", g.position.x}, {"y", g.position.y}, {"range", g.range}});
    }
    j["guards"] = guards;
  }
  if (inst.l) j["l"] = *inst.l;
  j["threshold"] = inst.threshold;
  return j;
}

inline Instance InstanceFromJson(const json& j) {
  try {
    Instance inst;
    inst.kind = ParseKind(j.at("kind").get<std::string>());
    inst.metric = ParseMetric(j.value("metric", std::string("L2")));
    if (j.contains("objects")) {
      int position = 0;
      for (const json& o : j.at("objects")) {
        Ball b{o.at("cx").get<double>(), o.at("cy").get<double>(), o.at("r").get<double>(),
               o.value("id", position)};
        if (!std::isfinite(b.cx) || !std::isfinite(b.cy) || !std::isfinite(b.r) || b.r < 0.0) {
          throw Error(ErrorCode::kInvalidInput, "invalid object geometry");
        }
        inst.objects.push_back(b);
        ++position;
      }
    }
    inst.points = internal::PointsFromJson(j, "points");
    inst.red = internal::PointsFromJson(j, "red");
    inst.terrain = internal::PointsFromJson(j, "terrain");
    if (j.contains("guards")) {
      for (const json& g : j.at("guards")) {
        inst.guards.push_back(
            {{g.at("x").get<double>(), g.at("y").get<double>()}, g.at("range").get<double>()});
      }
    }
    if (j.contains("l")) inst.l = j.at("l").get<int>();
    inst.threshold = j.value("threshold", 1.0);
    return inst;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("malformed instance: ") + e.what());
  }
}

struct SolutionFile {
  ProblemKind kind = ProblemKind::kCover;
  int k = 1;
  Solution solution;
  std::vector<Ball> objects;
};

inline json ToJson(const SolutionFile& s) {
  json trace = json::array();
  for (const Swap& swap : s.solution.trace) {
    trace.push_back({{"removed", internal::IndexSetToJson(swap.removed)},
                     {"added", internal::IndexSetToJson(swap.added)}});
  }
  json j;
  j["kind"] = KindName(s.kind);
  j["k"] = s.k;
  j["initial"] = internal::IndexSetToJson(s.solution.initial);
  j["selected"] = internal::IndexSetToJson(s.solution.selected);
  j["value"] = s.solution.selected.size();
  j["iterations"] = s.solution.iterations;
  j["converged"] = s.solution.converged;
  j["trace"] = trace;
  if (!s.objects.empty()) j["objects"] = internal::BallsToJson(s.objects);
  return j;
}

inline SolutionFile SolutionFromJson(const json& j) {
  try {
    SolutionFile s;
    s.kind = ParseKind(j.at("kind").get<std::string>());
    s.k = j.value("k", 1);
    s.solution.selected = internal::IndexSetFromJson(j.at("selected"));
    if (j.contains("initial")) s.solution.initial = internal::IndexSetFromJson(j.at("initial"));
    s.solution.iterations = j.value("iterations", 0);
    s.solution.converged = j.value("converged", true);
    if (j.contains("trace")) {
      for (const json& t : j.at("trace")) {
        s.solution.trace.push_back({internal::IndexSetFromJson(t.at("removed")),
                                    internal::IndexSetFromJson(t.at("added"))});
      }
    }
    return s;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("malformed solution: ") + e.what());
  }
}

inline json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, path + ": " + e.what());
  }
}

inline void WriteText(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidInput, "cannot write " + path);
  out << text;
}

}  // namespace geols

#endif  // GEOLS_HARNESS_INSTANCE_IO_HPP_
