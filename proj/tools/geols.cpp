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

// geols: command-line front end for instance generation, local search,
// exact oracles, verification, and benchmark runs.
//
//   geols gen --problem cover --seed 7 --out inst.json
//   geols solve inst.json --k 2 --out sol.json
//   geols oracle inst.json
//   geols verify inst.json sol.json
//   geols bench spec.json --out results.csv
//
// Exit codes: 0 ok, 1 verification failure, 2 input error.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "geols/error.hpp"
#include "geols/harness/experiment.hpp"
#include "geols/harness/instance_io.hpp"
#include "geols/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

std::string Dump(const geols::json& j) { return j.dump(2) + "\n"; }

geols::Instance LoadInstance(const std::string& path, const std::string& metric) {
  geols::Instance inst = geols::InstanceFromJson(geols::ReadJsonFile(path));
  if (!metric.empty()) inst.metric = geols::ParseMetric(metric);
  return inst;
}

geols::json DiagnosticsJson(const geols::Diagnostics& diag) {
  geols::json flags = geols::json::object();
  for (const auto& f : diag.flags) flags[f.name] = f.ok;
  return {{"flags", flags}, {"report", diag.report}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local search for geometric packing and covering"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  int k = 1;
  int size_cap = geols::kDefaultSizeCap;
  std::string metric;
  std::string out = "-";
  std::string instance_path;
  std::string solution_path;
  std::string spec_path;
  std::string problem = "cover";
  geols::GenParams params;

  auto* gen = app.add_subcommand("gen", "Generate an instance as JSON");
  gen->add_option("--problem", problem, "shallow_set, triangle_matching, cover, class_cover, terrain_guarding")
      ->required();
  gen->add_option("--seed", seed);
  gen->add_option("--metric", metric, "L2 or Linf");
  gen->add_option("--out", out);
  gen->add_option("--n", params.n, "objects, guards, or UDG points");
  gen->add_option("--points", params.points, "cover points or terrain targets");
  gen->add_option("--rmin", params.rmin);
  gen->add_option("--rmax", params.rmax);
  gen->add_option("--area", params.area, "side of the sampling square");
  gen->add_option("--l", params.l, "depth bound");
  gen->add_option("--threshold", params.threshold, "unit-disk-graph distance threshold");
  gen->add_option("--blue", params.blue);
  gen->add_option("--red", params.red);
  gen->add_flag("--grid", params.grid, "integer class-cover coordinates");
  gen->add_option("--vertices", params.vertices, "terrain vertices");
  gen->add_option("--height", params.height, "terrain height range");
  gen->add_option("--max-rejections", params.max_rejections);

  auto* solve = app.add_subcommand("solve", "Run k-swap local search on an instance");
  solve->add_option("instance", instance_path)->required();
  solve->add_option("--k", k);
  solve->add_option("--metric", metric);
  solve->add_option("--seed", seed, "accepted for symmetry; the search is deterministic");
  solve->add_option("--out", out);

  auto* oracle = app.add_subcommand("oracle", "Compute an exact optimum by enumeration");
  oracle->add_option("instance", instance_path)->required();
  oracle->add_option("--size-cap", size_cap);
  oracle->add_option("--metric", metric);
  oracle->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "Check a solution and run diagnostics");
  verify->add_option("instance", instance_path)->required();
  verify->add_option("solution", solution_path)->required();
  verify->add_option("--k", k, "overrides the k stored in the solution");
  verify->add_option("--size-cap", size_cap);
  verify->add_option("--metric", metric);
  verify->add_option("--out", out);

  auto* bench = app.add_subcommand("bench", "Run a benchmark spec and write CSV");
  bench->add_option("spec", spec_path)->required();
  bench->add_option("--seed", seed, "overrides the spec seed");
  bench->add_option("--k", k, "overrides the spec k list with a single value");
  bench->add_option("--size-cap", size_cap);
  bench->add_option("--metric", metric);
  bench->add_option("--out", out);
  bool no_timing = false;
  bench->add_flag("--no-timing", no_timing, "write 0 in the wall_ms column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*gen) {
      const auto m = metric.empty() ? geols::Metric::kL2 : geols::ParseMetric(metric);
      const auto inst = geols::generate_instance(geols::ParseKind(problem), m, params, seed);
      geols::WriteText(out, Dump(geols::ToJson(inst)));
      return kExitOk;
    }

    if (*solve) {
      const auto inst = LoadInstance(instance_path, metric);
      const auto w = geols::make_workload(inst);
      geols::SearchConfig cfg;
      cfg.k = k;
      geols::SolutionFile file{inst.kind, k, w->solve(cfg), {}};
      file.objects = w->selected_objects(file.solution.selected);
      geols::WriteText(out, Dump(geols::ToJson(file)));
      return kExitOk;
    }

    if (*oracle) {
      const auto inst = LoadInstance(instance_path, metric);
      const auto w = geols::make_workload(inst);
      const auto r = w->oracle(size_cap);
      geols::json j{{"kind", geols::KindName(inst.kind)},
                    {"optimum", r.optimum},
                    {"value", r.value},
                    {"explored", r.explored}};
      const auto objs = w->selected_objects(r.optimum);
      if (!objs.empty()) j["objects"] = geols::internal::BallsToJson(objs);
      geols::WriteText(out, Dump(j));
      return kExitOk;
    }

    if (*verify) {
      const auto inst = LoadInstance(instance_path, metric);
      const auto sol = geols::SolutionFromJson(geols::ReadJsonFile(solution_path));
      if (sol.kind != inst.kind) {
        throw geols::Error(geols::ErrorCode::kInvalidInput, "solution kind does not match instance");
      }
      const int check_k = verify->count("--k") ? k : sol.k;
      const auto w = geols::make_workload(inst);
      const auto& selected = sol.solution.selected;
      for (int i : selected) {
        if (i < 0 || i >= w->ground_size()) {
          throw geols::Error(geols::ErrorCode::kInvalidInput, "solution index out of range");
        }
      }
      const bool feasible = w->feasible(selected);
      const bool local_opt = feasible && w->locally_optimal(selected, check_k);
      std::optional<bool> replay;
      if (!sol.solution.trace.empty() || !sol.solution.initial.empty()) {
        const auto r = w->replay(sol.solution);
        replay = r && *r == selected;
      }
      std::optional<geols::IndexSet> optimum;
      std::optional<double> ratio;
      if (w->ground_size() <= size_cap) {
        const auto r = w->oracle(size_cap);
        optimum = r.optimum;
        ratio = geols::ApproximationRatio(w->direction(), static_cast<int>(selected.size()), r.value);
      }
      const auto diag = w->diagnose(selected, optimum);
      const bool pass = feasible && local_opt && replay.value_or(true) && diag.ok();
      geols::json j{{"pass", pass},
                    {"feasible", feasible},
                    {"locally_optimal", local_opt},
                    {"k", check_k},
                    {"value", selected.size()},
                    {"diagnostics", DiagnosticsJson(diag)}};
      if (replay) j["replay"] = *replay;
      if (optimum) j["oracle_value"] = optimum->size();
      if (ratio) j["ratio"] = *ratio;
      geols::WriteText(out, Dump(j));
      return pass ? kExitOk : kExitVerifyFailed;
    }

    if (*bench) {
      auto spec = geols::BenchSpecFromJson(geols::ReadJsonFile(spec_path));
      if (bench->count("--seed")) spec.seed = seed;
      if (bench->count("--k")) spec.ks = {k};
      if (bench->count("--size-cap")) spec.size_cap = size_cap;
      if (!metric.empty()) spec.metric = geols::ParseMetric(metric);
      const auto rows = geols::run_experiment(spec);
      std::ostringstream csv;
      geols::write_csv(rows, csv, !no_timing);
      geols::WriteText(out, csv.str());
      const bool all_pass =
          std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.passed(); });
      return all_pass ? kExitOk : kExitVerifyFailed;
    }
  } catch (const geols::Error& e) {
    std::cerr << "geols: " << geols::ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "geols: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
