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

#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "geols/error.hpp"
#include "geols/geom.hpp"
#include "geols/harness/experiment.hpp"
#include "geols/harness/generators.hpp"
#include "geols/harness/instance_io.hpp"
#include "geols/harness/rng.hpp"

namespace geols {
namespace {

std::string Csv(const std::vector<ExperimentRecord>& rows, bool timing = false) {
  std::ostringstream out;
  write_csv(rows, out, timing);
  return out.str();
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<std::string> Cells(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

TEST(SplitMix64, ReferenceSequence) {
  // Outputs of the reference splitmix64 for state 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.next(), 0x06C45D188009454FULL);
}

TEST(SplitMix64, UniformRange) {
  SplitMix64 rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(rng.below(7), 7u);
  }
}

TEST(GenShallowDisks, Examples) {
  EXPECT_TRUE(gen_shallow_disks(0, 1, 1, 1, 20, 7).empty());
  EXPECT_EQ(max_depth(gen_shallow_disks(1, 1, 1, 1, 20, 7)), 1);
  const auto disks = gen_shallow_disks(30, 2, 1.0, 1.0, 20.0, 7);
  EXPECT_EQ(disks.size(), 30u);
  EXPECT_LE(max_depth(disks), 2);
}

TEST(GenShallowDisks, StallsWhenAreaIsTooSmall) {
  try {
    gen_shallow_disks(50, 1, 5.0, 5.0, 1.0, 7, 200);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGenerationStall);
  }
  EXPECT_THROW(gen_shallow_disks(3, 0, 1, 1, 10, 7), Error);
}

TEST(Generators, DeterministicBytes) {
  for (ProblemKind kind : {ProblemKind::kShallowSet, ProblemKind::kTriangleMatching,
                           ProblemKind::kCover, ProblemKind::kClassCover,
                           ProblemKind::kTerrainGuarding}) {
    for (Metric m : {Metric::kL2, Metric::kLinf}) {
      GenParams p;
      const std::string a = ToJson(generate_instance(kind, m, p, 99)).dump();
      const std::string b = ToJson(generate_instance(kind, m, p, 99)).dump();
      const std::string c = ToJson(generate_instance(kind, m, p, 100)).dump();
      EXPECT_EQ(a, b) << KindName(kind);
      EXPECT_NE(a, c) << KindName(kind);
    }
  }
}

TEST(GenCoverInstance, NoPointsMeansEmptyOptimum) {
  const auto inst = gen_cover_instance<Disk>(6, 0, 0.5, 1.5, 5.0, 3);
  EXPECT_TRUE(inst.points.empty());
  EXPECT_TRUE(cover_feasible(inst, IndexSet{}));
  EXPECT_EQ(exact_optimum(make_cover_problem(inst)).value, 0);
}

TEST(GenCoverInstance, ContainmentFreeAndCovered) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = gen_cover_instance<Square>(8, 20, 0.3, 2.0, 5.0, seed);
    EXPECT_EQ(inst.objects.size(), 8u);
    EXPECT_EQ(inst.points.size(), 20u);
    IndexSet all(inst.objects.size());
    std::iota(all.begin(), all.end(), 0);
    EXPECT_TRUE(cover_feasible(inst, all));
  }
}

TEST(GenClassCover, DisjointColors) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = gen_class_cover(5, 5, 6.0, true, seed);
    for (const Point2& b : inst.blue) {
      EXPECT_EQ(b.x, std::floor(b.x));
      for (const Point2& r : inst.red) EXPECT_FALSE(b == r);
    }
  }
  // 36 grid cells cannot hold 40 distinct points.
  EXPECT_THROW(gen_class_cover(20, 20, 6.0, true, 1, 500), Error);
}

TEST(GenTerrain, AllGuardsSeeEverything) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = gen_terrain(10, 6, 12, 1.0, 4.0, 3.0, seed);
    IndexSet all(inst.guards.size());
    std::iota(all.begin(), all.end(), 0);
    EXPECT_TRUE(guarding_feasible(inst, all));
  }
}

TEST(InstanceIo, RoundTrip) {
  for (ProblemKind kind : {ProblemKind::kShallowSet, ProblemKind::kTriangleMatching,
                           ProblemKind::kCover, ProblemKind::kClassCover,
                           ProblemKind::kTerrainGuarding}) {
    const Instance inst = generate_instance(kind, Metric::kLinf, {}, 5);
    const json j = ToJson(inst);
    const Instance back = InstanceFromJson(json::parse(j.dump()));
    EXPECT_EQ(ToJson(back).dump(), j.dump()) << KindName(kind);
  }
}

TEST(InstanceIo, IdsDefaultToPosition) {
  const auto j = json::parse(R"({"kind": "cover", "objects": [{"cx": 0, "cy": 0, "r": 1},
      {"cx": 3, "cy": 0, "r": 1, "id": 9}], "points": [[0, 0]]})");
  const Instance inst = InstanceFromJson(j);
  ASSERT_EQ(inst.objects.size(), 2u);
  EXPECT_EQ(inst.objects[0].id, 0);
  EXPECT_EQ(inst.objects[1].id, 9);
  EXPECT_EQ(inst.metric, Metric::kL2);
}

TEST(InstanceIo, MalformedInputIsInvalid) {
  for (const char* text : {R"({"objects": []})", R"({"kind": "nope"})",
                           R"({"kind": "cover", "points": [[1]]})",
                           R"({"kind": "cover", "objects": [{"cx": 0, "cy": 0, "r": -1}]})",
                           R"({"kind": "cover", "metric": "L1"})"}) {
    try {
      InstanceFromJson(json::parse(text));
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidInput) << text;
    }
  }
}

TEST(SolutionIo, RoundTrip) {
  const Instance inst = generate_instance(ProblemKind::kCover, Metric::kL2, {}, 8);
  const auto w = make_workload(inst);
  SearchConfig cfg;
  cfg.k = 2;
  const SolutionFile file{inst.kind, 2, w->solve(cfg), {}};
  const SolutionFile back = SolutionFromJson(json::parse(ToJson(file).dump()));
  EXPECT_EQ(back.solution.selected, file.solution.selected);
  EXPECT_EQ(back.solution.trace, file.solution.trace);
  EXPECT_EQ(back.k, 2);
  EXPECT_EQ(w->replay(back.solution), file.solution.selected);
}

TEST(Workload, EveryKindSolvesAndVerifies) {
  GenParams p;
  p.n = 7;
  p.points = 12;
  p.blue = 4;
  p.red = 4;
  for (ProblemKind kind : {ProblemKind::kShallowSet, ProblemKind::kTriangleMatching,
                           ProblemKind::kCover, ProblemKind::kClassCover,
                           ProblemKind::kTerrainGuarding}) {
    for (Metric m : {Metric::kL2, Metric::kLinf}) {
      const auto w = make_workload(generate_instance(kind, m, p, 21));
      const auto rows = run_instance(*w, 0, std::vector<int>{1, 2}, 20);
      ASSERT_EQ(rows.size(), 2u);
      for (const auto& r : rows) {
        EXPECT_TRUE(r.passed()) << KindName(kind) << " " << MetricName(m) << " " << r.status;
      }
    }
  }
}

TEST(ApproximationRatio, Direction) {
  EXPECT_DOUBLE_EQ(*ApproximationRatio(Direction::kMinimize, 6, 4), 1.5);
  EXPECT_DOUBLE_EQ(*ApproximationRatio(Direction::kMaximize, 4, 6), 1.5);
  EXPECT_DOUBLE_EQ(*ApproximationRatio(Direction::kMinimize, 0, 0), 1.0);
  EXPECT_DOUBLE_EQ(*ApproximationRatio(Direction::kMaximize, 0, 0), 1.0);
}

TEST(RunExperiment, ZeroTrialsIsHeaderOnly) {
  BenchSpec spec;
  spec.trials = 0;
  EXPECT_EQ(Csv(run_experiment(spec)), std::string(kCsvHeader) + "\n");
}

TEST(RunExperiment, FullBudgetRatiosAreOne) {
  BenchSpec spec = BenchSpecFromJson(json::parse(
      R"({"problem": "cover", "trials": 10, "seed": 4, "k": [12],
          "params": {"n": 10, "points": 20, "area": 6}})"));
  const auto rows = run_experiment(spec);
  ASSERT_EQ(rows.size(), 10u);
  for (const auto& r : rows) {
    EXPECT_LE(r.n, 12);
    ASSERT_TRUE(r.ratio.has_value()) << r.status;
    EXPECT_DOUBLE_EQ(*r.ratio, 1.0);
    EXPECT_TRUE(r.passed());
  }
}

TEST(RunExperiment, RowsOrderedByInstanceThenK) {
  BenchSpec spec;
  spec.kind = ProblemKind::kShallowSet;
  spec.trials = 4;
  spec.ks = {1, 2, 3};
  spec.params.n = 8;
  const auto rows = run_experiment(spec);
  ASSERT_EQ(rows.size(), 12u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].instance_id, static_cast<int>(i / 3));
    EXPECT_EQ(rows[i].k, static_cast<int>(i % 3) + 1);
  }
}

TEST(RunExperiment, CsvIsReproducible) {
  BenchSpec spec;
  spec.kind = ProblemKind::kShallowSet;
  spec.metric = Metric::kLinf;
  spec.trials = 5;
  spec.seed = 17;
  spec.ks = {1, 2};
  spec.params.n = 9;
  EXPECT_EQ(Csv(run_experiment(spec)), Csv(run_experiment(spec)));
}

TEST(RunExperiment, CsvSchema) {
  BenchSpec spec;
  spec.trials = 2;
  spec.ks = {1};
  spec.size_cap = 3;  // forces the oracle off
  const auto lines = Lines(Csv(run_experiment(spec), true));
  ASSERT_EQ(lines.size(), 3u);
  const auto header = Cells(lines[0]);
  EXPECT_EQ(header.front(), "schema=1");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = Cells(lines[i]);
    ASSERT_EQ(cells.size(), header.size()) << lines[i];
    EXPECT_EQ(cells[0], "1");
    EXPECT_EQ(cells[1], "cover");
    EXPECT_EQ(cells[6], "") << "oracle column";
    EXPECT_EQ(cells[7], "") << "ratio column";
  }
}

TEST(RunExperiment, GenerationFailureIsRecorded) {
  BenchSpec spec;
  spec.kind = ProblemKind::kClassCover;
  spec.trials = 1;
  spec.params.grid = true;
  spec.params.area = 2;
  spec.params.blue = 3;
  spec.params.red = 3;
  spec.params.max_rejections = 50;
  const auto rows = run_experiment(spec);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].status, "GENERATION_STALL");
  EXPECT_FALSE(rows[0].passed());
}

TEST(BenchSpec, Validation) {
  EXPECT_THROW(BenchSpecFromJson(json::parse(R"({"trials": 1})")), Error);
  EXPECT_THROW(BenchSpecFromJson(json::parse(R"({"problem": "cover", "k": [0]})")), Error);
  EXPECT_THROW(BenchSpecFromJson(json::parse(R"({"problem": "cover", "trials": -1})")), Error);
  EXPECT_EQ(BenchSpecFromJson(json::parse(R"({"problem": "cover", "k": 3})")).ks,
            (std::vector<int>{3}));
}

}  // namespace
}  // namespace geols
