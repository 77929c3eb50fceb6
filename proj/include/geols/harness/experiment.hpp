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

// Ties instances, solvers, oracles, and diagnostics together for the CLI and
// the benchmark runner.

#ifndef GEOLS_HARNESS_EXPERIMENT_HPP_
#define GEOLS_HARNESS_EXPERIMENT_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "geols/covering.hpp"
#include "geols/diagnostics.hpp"
#include "geols/engine.hpp"
#include "geols/error.hpp"
#include "geols/geom.hpp"
#include "geols/harness/generators.hpp"
#include "geols/harness/instance_io.hpp"
#include "geols/oracle.hpp"
#include "geols/packing.hpp"

namespace geols {

struct DiagnosticFlag {
  std::string name;
  bool ok = true;
};

struct Diagnostics {
  std::vector<DiagnosticFlag> flags;
  json report = json::object();

  bool ok() const {
    return std::all_of(flags.begin(), flags.end(), [](const auto& f) { return f.ok; });
  }
  void Add(std::string name, bool ok) { flags.push_back({std::move(name), ok}); }
};

// Type-erased view of one instance as a local-search problem.
class Workload {
 public:
  virtual ~Workload() = default;

  virtual ProblemKind kind() const = 0;
  virtual Direction direction() const = 0;
  virtual int ground_size() const = 0;
  virtual bool feasible(std::span<const int> s) const = 0;
  virtual Solution solve(const SearchConfig& cfg) const = 0;
  virtual OracleResult oracle(int size_cap) const = 0;
  virtual bool locally_optimal(std::span<const int> s, int k) const = 0;
  virtual std::optional<IndexSet> replay(const Solution& s) const = 0;
  // `optimum` is absent when the oracle did not run; checks that need it are
  // skipped.
  virtual Diagnostics diagnose(std::span<const int> local,
                               const std::optional<IndexSet>& optimum) const = 0;
  virtual std::vector<Ball> selected_objects(std::span<const int>) const { return {}; }
};

namespace internal {

template <LocalSearchProblem P>
class WorkloadBase : public Workload {
 public:
  WorkloadBase(ProblemKind kind, P problem) : kind_(kind), problem_(std::move(problem)) {}

  ProblemKind kind() const override { return kind_; }
  Direction direction() const override { return problem_.direction(); }
  int ground_size() const override { return problem_.ground_size(); }
  bool feasible(std::span<const int> s) const override { return problem_.is_feasible(s); }
  Solution solve(const SearchConfig& cfg) const override { return local_search(problem_, cfg); }
  OracleResult oracle(int size_cap) const override { return exact_optimum(problem_, size_cap); }
  bool locally_optimal(std::span<const int> s, int k) const override {
    return verify_local_optimality(problem_, s, k);
  }
  std::optional<IndexSet> replay(const Solution& s) const override {
    return replay_trace(problem_, std::span<const int>(s.initial),
                        std::span<const Swap>(s.trace));
  }

 protected:
  const P& problem() const { return problem_; }

 private:
  ProblemKind kind_;
  P problem_;
};

// Elements of a not in b; both sorted.
inline IndexSet Minus(std::span<const int> a, std::span<const int> b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Locality graph between the local solution and the optimum after dropping
// shared objects and the points those shared objects already cover.
template <Region Shape>
void DiagnoseLocality(std::span<const Shape> objects, std::span<const Point2> points,
                      std::span<const int> local, std::span<const int> optimum,
                      Diagnostics& diag) {
  IndexSet common;
  std::set_intersection(local.begin(), local.end(), optimum.begin(), optimum.end(),
                        std::back_inserter(common));
  const auto blue = SelectObjects(objects, std::span<const int>(Minus(local, common)));
  const auto red = SelectObjects(objects, std::span<const int>(Minus(optimum, common)));
  std::vector<Point2> open_points;
  for (const Point2& p : points) {
    const bool solved = std::any_of(common.begin(), common.end(), [&](int i) {
      return contains(objects[static_cast<std::size_t>(i)], p);
    });
    if (!solved) open_points.push_back(p);
  }
  try {
    const auto graph = build_locality_graph(std::span<const Shape>(blue),
                                            std::span<const Shape>(red),
                                            std::span<const Point2>(open_points));
    diag.Add("locality", graph.locality_condition_holds() && graph.monochromatic_walks == 0);
    diag.Add("planar_edge_bound", check_planarity_bound(graph));
    diag.report["locality_vertices"] = graph.vertex_count();
    diag.report["locality_edges"] = graph.edges.size();
    diag.report["locality_points"] = open_points.size();
    diag.report["monochromatic_walks"] = graph.monochromatic_walks;
  } catch (const Error& e) {
    diag.Add("locality", false);
    diag.report["locality_error"] = e.what();
  }
}

template <Region Shape>
class ShallowWorkload : public WorkloadBase<ShallowSetProblem<Shape>> {
 public:
  explicit ShallowWorkload(ShallowSetInstance<Shape> inst)
      : WorkloadBase<ShallowSetProblem<Shape>>(ProblemKind::kShallowSet,
                                               ShallowSetProblem<Shape>(std::move(inst))) {}

  Diagnostics diagnose(std::span<const int> local,
                       const std::optional<IndexSet>& optimum) const override {
    Diagnostics diag;
    const auto& inst = this->problem().instance();
    const std::span<const Shape> objs(inst.objects);
    diag.report["local_depth"] = max_depth(SelectObjects(objs, local));
    if (optimum) {
      const auto b = SelectObjects(objs, local);
      const auto r = SelectObjects(objs, std::span<const int>(*optimum));
      const auto u = union_shallowness(std::span<const Shape>(b), std::span<const Shape>(r), inst.l);
      diag.Add("union_2l_shallow", u.ok);
      diag.report["union_depth"] = u.depth;
    }
    return diag;
  }

  std::vector<Ball> selected_objects(std::span<const int> s) const override {
    const auto objs = SelectObjects(std::span<const Shape>(this->problem().instance().objects), s);
    return ToBalls(std::span<const Shape>(objs));
  }
};

class MatchingWorkload : public WorkloadBase<TriangleMatchingProblem> {
 public:
  explicit MatchingWorkload(TriangleMatchingInstance inst)
      : WorkloadBase(ProblemKind::kTriangleMatching, TriangleMatchingProblem(std::move(inst))) {}

  Diagnostics diagnose(std::span<const int> local,
                       const std::optional<IndexSet>& optimum) const override {
    Diagnostics diag;
    const auto& inst = problem().instance();
    diag.report["udg_depth"] = inst.udg_depth;
    diag.report["degenerate_triples"] = inst.degenerate_triples;
    diag.report["udg_shallow_assumption"] = inst.shallow_assumption_holds();
    if (!optimum) return diag;
    IndexSet common;
    std::set_intersection(local.begin(), local.end(), optimum->begin(), optimum->end(),
                          std::back_inserter(common));
    std::vector<Triangle> blue, red;
    for (int t : Minus(local, common)) blue.push_back(inst.triangles[static_cast<std::size_t>(t)]);
    for (int t : Minus(*optimum, common)) red.push_back(inst.triangles[static_cast<std::size_t>(t)]);
    const auto edges = triangle_locality_edges(blue, red, inst.threshold);
    bool sound = true;
    for (std::size_t i = 0; i < blue.size(); ++i) {
      for (std::size_t j = 0; j < red.size(); ++j) {
        if (blue[i].shares_vertex(red[j]) &&
            !std::count(edges.begin(), edges.end(),
                        Edge{static_cast<int>(i), static_cast<int>(j)})) {
          sound = false;
        }
      }
    }
    diag.Add("triangle_locality", sound);
    std::vector<Disk> rep_disks;
    for (const auto& t : blue) rep_disks.push_back({t.rep, inst.threshold, static_cast<int>(rep_disks.size())});
    for (const auto& t : red) rep_disks.push_back({t.rep, inst.threshold, static_cast<int>(rep_disks.size())});
    diag.report["representative_depth"] = max_depth(rep_disks);
    diag.report["locality_edges"] = edges.size();
    return diag;
  }
};

template <Region Shape>
class CoverWorkload : public WorkloadBase<CoverageProblem> {
 public:
  explicit CoverWorkload(CoverInstance<Shape> inst)
      : WorkloadBase(ProblemKind::kCover, make_cover_problem(inst)), inst_(std::move(inst)) {}

  Diagnostics diagnose(std::span<const int> local,
                       const std::optional<IndexSet>& optimum) const override {
    Diagnostics diag;
    diag.Add("covers_points", cover_feasible(inst_, local));
    if (optimum) {
      DiagnoseLocality(std::span<const Shape>(inst_.objects), std::span<const Point2>(inst_.points),
                       local, std::span<const int>(*optimum), diag);
    }
    return diag;
  }

  std::vector<Ball> selected_objects(std::span<const int> s) const override {
    const auto objs = SelectObjects(std::span<const Shape>(inst_.objects), s);
    return ToBalls(std::span<const Shape>(objs));
  }

 private:
  CoverInstance<Shape> inst_;
};

template <Region Shape>
class ClassCoverWorkload : public WorkloadBase<CoverageProblem> {
 public:
  ClassCoverWorkload(ClassCoverInstance inst, std::vector<Shape> candidates)
      : WorkloadBase(ProblemKind::kClassCover,
                     make_class_cover_problem(inst, std::span<const Shape>(candidates))),
        inst_(std::move(inst)),
        candidates_(std::move(candidates)) {}

  static std::unique_ptr<Workload> Create(ClassCoverInstance inst) {
    const auto raw = class_cover_candidates<Shape>(inst);
    auto candidates =
        CoverInstance<Shape>::Create(reduce_class_cover_candidates(std::span<const Shape>(raw),
                                                                   std::span<const Point2>(inst.blue)),
                                     inst.blue)
            .objects;
    return std::make_unique<ClassCoverWorkload>(std::move(inst), std::move(candidates));
  }

  Diagnostics diagnose(std::span<const int> local,
                       const std::optional<IndexSet>& optimum) const override {
    Diagnostics diag;
    auto red_free = [&](std::span<const int> s) {
      return std::all_of(s.begin(), s.end(), [&](int i) {
        return is_legal(candidates_[static_cast<std::size_t>(i)], std::span<const Point2>(inst_.red));
      });
    };
    diag.Add("zero_red", red_free(local));
    diag.report["candidates"] = candidates_.size();
    if (optimum) {
      DiagnoseLocality(std::span<const Shape>(candidates_), std::span<const Point2>(inst_.blue),
                       local, std::span<const int>(*optimum), diag);
    }
    return diag;
  }

  std::vector<Ball> selected_objects(std::span<const int> s) const override {
    const auto objs = SelectObjects(std::span<const Shape>(candidates_), s);
    return ToBalls(std::span<const Shape>(objs));
  }

 private:
  ClassCoverInstance inst_;
  std::vector<Shape> candidates_;
};

class GuardingWorkload : public WorkloadBase<CoverageProblem> {
 public:
  explicit GuardingWorkload(GuardingInstance inst)
      : WorkloadBase(ProblemKind::kTerrainGuarding, make_guarding_problem(inst)),
        inst_(std::move(inst)) {}

  Diagnostics diagnose(std::span<const int> local,
                       const std::optional<IndexSet>&) const override {
    Diagnostics diag;
    bool all_seen = true;
    for (const Point2& x : inst_.targets) {
      const bool seen = std::any_of(local.begin(), local.end(), [&](int g) {
        const Guard& guard = inst_.guards[static_cast<std::size_t>(g)];
        return terrain_sees(guard.position, x, guard.range, inst_.terrain);
      });
      all_seen = all_seen && seen;
    }
    diag.Add("visibility_replay", all_seen);
    diag.report["guard_disk_depth"] = guarding_depth_check(inst_);
    return diag;
  }

 private:
  GuardingInstance inst_;
};

}  // namespace internal

inline std::unique_ptr<Workload> make_workload(const Instance& inst) {
  using namespace internal;
  const bool squares = inst.metric == Metric::kLinf;
  switch (inst.kind) {
    case ProblemKind::kShallowSet: {
      if (!inst.l) throw Error(ErrorCode::kInvalidInput, "shallow_set instance needs 'l'");
      if (squares) {
        return std::make_unique<ShallowWorkload<Square>>(
            ShallowSetInstance<Square>{ObjectsAs<Square>(inst.objects), *inst.l});
      }
      return std::make_unique<ShallowWorkload<Disk>>(
          ShallowSetInstance<Disk>{ObjectsAs<Disk>(inst.objects), *inst.l});
    }
    case ProblemKind::kTriangleMatching:
      return std::make_unique<MatchingWorkload>(
          TriangleMatchingInstance::Create(inst.points, inst.threshold, inst.l));
    case ProblemKind::kCover:
      if (squares) {
        return std::make_unique<CoverWorkload<Square>>(
            CoverInstance<Square>::Create(ObjectsAs<Square>(inst.objects), inst.points));
      }
      return std::make_unique<CoverWorkload<Disk>>(
          CoverInstance<Disk>::Create(ObjectsAs<Disk>(inst.objects), inst.points));
    case ProblemKind::kClassCover: {
      ClassCoverInstance cc{inst.points, inst.red};
      if (squares) return ClassCoverWorkload<Square>::Create(std::move(cc));
      return ClassCoverWorkload<Disk>::Create(std::move(cc));
    }
    case ProblemKind::kTerrainGuarding:
      return std::make_unique<GuardingWorkload>(
          GuardingInstance::Create(TerrainChain(inst.terrain), inst.guards, inst.points));
  }
  throw Error(ErrorCode::kInvalidInput, "unsupported problem kind");
}

// ---------------------------------------------------------------------------
// Generation

struct GenParams {
  int n = 10;          // objects, guards, or UDG points
  int points = 20;     // cover points or terrain targets
  double rmin = 0.5;
  double rmax = 1.5;
  double area = 10.0;
  int l = 2;
  double threshold = 1.0;
  int blue = 5;
  int red = 5;
  bool grid = false;   // integer class-cover coordinates
  int vertices = 12;   // terrain vertices
  double height = 3.0;
  int max_rejections = kDefaultMaxRejections;
};

inline GenParams GenParamsFromJson(const json& j) {
  GenParams p;
  p.n = j.value("n", p.n);
  p.points = j.value("points", p.points);
  p.rmin = j.value("rmin", p.rmin);
  p.rmax = j.value("rmax", p.rmax);
  p.area = j.value("area", p.area);
  p.l = j.value("l", p.l);
  p.threshold = j.value("threshold", p.threshold);
  p.blue = j.value("blue", p.blue);
  p.red = j.value("red", p.red);
  p.grid = j.value("grid", p.grid);
  p.vertices = j.value("vertices", p.vertices);
  p.height = j.value("height", p.height);
  p.max_rejections = j.value("max_rejections", p.max_rejections);
  return p;
}

inline Instance generate_instance(ProblemKind kind, Metric metric, const GenParams& p,
                                  std::uint64_t seed) {
  Instance inst;
  inst.kind = kind;
  inst.metric = metric;
  const bool squares = metric == Metric::kLinf;
  switch (kind) {
    case ProblemKind::kShallowSet:
      inst.l = p.l;
      inst.objects = squares ? ToBalls<Square>(gen_regions<Square>(p.n, p.rmin, p.rmax, p.area, seed))
                             : ToBalls<Disk>(gen_regions<Disk>(p.n, p.rmin, p.rmax, p.area, seed));
      break;
    case ProblemKind::kTriangleMatching: {
      inst.metric = Metric::kL2;
      inst.l = p.l;
      inst.threshold = p.threshold;
      inst.points = gen_triangle_instance(p.n, p.area, p.threshold, p.l, seed).points;
      break;
    }
    case ProblemKind::kCover:
      if (squares) {
        auto c = gen_cover_instance<Square>(p.n, p.points, p.rmin, p.rmax, p.area, seed,
                                            p.max_rejections);
        inst.objects = ToBalls<Square>(c.objects);
        inst.points = c.points;
      } else {
        auto c = gen_cover_instance<Disk>(p.n, p.points, p.rmin, p.rmax, p.area, seed,
                                          p.max_rejections);
        inst.objects = ToBalls<Disk>(c.objects);
        inst.points = c.points;
      }
      break;
    case ProblemKind::kClassCover: {
      auto c = gen_class_cover(p.blue, p.red, p.area, p.grid, seed, p.max_rejections);
      inst.points = c.blue;
      inst.red = c.red;
      break;
    }
    case ProblemKind::kTerrainGuarding: {
      inst.metric = Metric::kL2;
      auto g = gen_terrain(p.vertices, p.n, p.points, p.rmin, p.rmax, p.height, seed,
                           p.max_rejections);
      inst.terrain = g.terrain.vertices();
      inst.guards = g.guards;
      inst.points = g.targets;
      break;
    }
  }
  return inst;
}

// ---------------------------------------------------------------------------
// Benchmark runs

struct BenchSpec {
  ProblemKind kind = ProblemKind::kCover;
  Metric metric = Metric::kL2;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<int> ks{1};
  int size_cap = kDefaultSizeCap;
  GenParams params;
};

inline BenchSpec BenchSpecFromJson(const json& j) {
  try {
    BenchSpec spec;
    spec.kind = ParseKind(j.at("problem").get<std::string>());
    spec.metric = ParseMetric(j.value("metric", std::string("L2")));
    spec.trials = j.value("trials", 0);
    spec.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("k")) {
      spec.ks = j.at("k").is_array() ? j.at("k").get<std::vector<int>>()
                                     : std::vector<int>{j.at("k").get<int>()};
    }
    spec.size_cap = j.value("size_cap", kDefaultSizeCap);
    if (j.contains("params")) spec.params = GenParamsFromJson(j.at("params"));
    if (spec.trials < 0) throw Error(ErrorCode::kInvalidInput, "trials must be >= 0");
    for (int k : spec.ks) {
      if (k < 1) throw Error(ErrorCode::kInvalidInput, "k values must be >= 1");
    }
    return spec;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, std::string("malformed bench spec: ") + e.what());
  }
}

struct ExperimentRecord {
  ProblemKind kind = ProblemKind::kCover;
  int instance_id = 0;
  int n = 0;
  int k = 0;
  int local_value = 0;
  std::optional<int> oracle_value;
  // local/oracle for minimization, oracle/local for maximization.
  std::optional<double> ratio;
  int iterations = 0;
  double wall_ms = 0.0;
  bool local_opt_ok = false;
  bool replay_ok = false;
  bool diagnostics_ok = false;
  std::vector<std::string> failed_flags;
  std::string status = "ok";

  bool passed() const {
    return status == "ok" && local_opt_ok && replay_ok && diagnostics_ok &&
           (!ratio || *ratio >= 1.0 - 1e-9);
  }
};

inline std::optional<double> ApproximationRatio(Direction dir, int local, int oracle) {
  if (dir == Direction::kMinimize) {
    if (oracle == 0) return local == 0 ? std::optional<double>(1.0) : std::nullopt;
    return static_cast<double>(local) / oracle;
  }
  if (local == 0) return oracle == 0 ? std::optional<double>(1.0) : std::nullopt;
  return static_cast<double>(oracle) / local;
}

// Solves one instance at every k in `ks`. The oracle runs once, when the
// ground set fits under the size cap.
inline std::vector<ExperimentRecord> run_instance(const Workload& w, int instance_id,
                                                  std::span<const int> ks, int size_cap) {
  std::vector<ExperimentRecord> rows;
  std::optional<OracleResult> oracle;
  std::string oracle_status;
  if (w.ground_size() <= size_cap) {
    try {
      oracle = w.oracle(size_cap);
    } catch (const Error& e) {
      oracle_status = std::string(ErrorCodeName(e.code()));
    }
  }
  for (int k : ks) {
    ExperimentRecord rec;
    rec.kind = w.kind();
    rec.instance_id = instance_id;
    rec.n = w.ground_size();
    rec.k = k;
    try {
      SearchConfig cfg;
      cfg.k = k;
      const auto start = std::chrono::steady_clock::now();
      const Solution sol = w.solve(cfg);
      rec.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
      rec.local_value = static_cast<int>(sol.selected.size());
      rec.iterations = sol.iterations;
      rec.local_opt_ok = w.locally_optimal(sol.selected, k);
      const auto replayed = w.replay(sol);
      rec.replay_ok = replayed && *replayed == sol.selected &&
                      sol.iterations <= w.ground_size();
      std::optional<IndexSet> optimum;
      if (oracle) {
        optimum = oracle->optimum;
        rec.oracle_value = oracle->value;
        rec.ratio = ApproximationRatio(w.direction(), rec.local_value, oracle->value);
      }
      const Diagnostics diag = w.diagnose(sol.selected, optimum);
      rec.diagnostics_ok = diag.ok();
      for (const auto& f : diag.flags) {
        if (!f.ok) rec.failed_flags.push_back(f.name);
      }
      if (!oracle_status.empty()) rec.status = "oracle_" + oracle_status;
    } catch (const Error& e) {
      rec.status = std::string(ErrorCodeName(e.code()));
    }
    rows.push_back(std::move(rec));
  }
  return rows;
}

inline std::vector<ExperimentRecord> run_experiment(const BenchSpec& spec) {
  std::vector<ExperimentRecord> rows;
  for (int t = 0; t < spec.trials; ++t) {
    const std::uint64_t seed = DeriveSeed(spec.seed, static_cast<std::uint64_t>(t));
    std::vector<ExperimentRecord> trial_rows;
    try {
      const Instance inst = generate_instance(spec.kind, spec.metric, spec.params, seed);
      const auto w = make_workload(inst);
      trial_rows = run_instance(*w, t, spec.ks, spec.size_cap);
    } catch (const Error& e) {
      for (int k : spec.ks) {
        ExperimentRecord rec;
        rec.kind = spec.kind;
        rec.instance_id = t;
        rec.k = k;
        rec.status = std::string(ErrorCodeName(e.code()));
        trial_rows.push_back(rec);
      }
    }
    rows.insert(rows.end(), trial_rows.begin(), trial_rows.end());
  }
  return rows;
}

inline constexpr const char* kCsvHeader =
    "schema=1,problem,instance,n,k,local,oracle,ratio,iterations,wall_ms,"
    "local_opt,replay,diagnostics,failed_flags,status";

inline void write_csv(std::span<const ExperimentRecord> rows, std::ostream& out,
                      bool with_timing = true) {
  out << kCsvHeader << '\n';
  for (const ExperimentRecord& r : rows) {
    std::ostringstream line;
    line << 1 << ',' << KindName(r.kind) << ',' << r.instance_id << ',' << r.n << ',' << r.k
         << ',' << r.local_value << ',';
    if (r.oracle_value) line << *r.oracle_value;
    line << ',';
    if (r.ratio) line << std::fixed << std::setprecision(6) << *r.ratio;
    line << ',' << r.iterations << ',';
    line << std::fixed << std::setprecision(3) << (with_timing ? r.wall_ms : 0.0);
    line << ',' << (r.local_opt_ok ? 1 : 0) << ',' << (r.replay_ok ? 1 : 0) << ','
         << (r.diagnostics_ok ? 1 : 0) << ',';
    for (std::size_t i = 0; i < r.failed_flags.size(); ++i) {
      line << (i ? ";" : "") << r.failed_flags[i];
    }
    line << ',' << r.status;
    out << line.str() << '\n';
  }
}

}  // namespace geols

#endif  // GEOLS_HARNESS_EXPERIMENT_HPP_
