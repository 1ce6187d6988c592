// Copyright 2026 The Ideonaut Authors.
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

#ifndef IDEONAUT_BENCH_HARNESS_H_
#define IDEONAUT_BENCH_HARNESS_H_

#include <filesystem>
#include <functional>
#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "ideonaut/eval/metrics.h"
#include "ideonaut/gateway/backend.h"
#include "ideonaut/pipeline/run_config.h"
#include "ideonaut/projector/projector.h"

namespace ideonaut::bench {

enum class Benchmark { kAut, kInstances, kSimilarities, kScientific };

std::string_view ToString(Benchmark benchmark);
Benchmark ParseBenchmark(std::string_view name);

struct Task {
  std::string task_id;
  std::string prompt;
};

struct TaskSet {
  Benchmark benchmark = Benchmark::kAut;
  std::vector<Task> tasks;
};

struct BaselineTask {
  std::string task_id;
  std::vector<std::string> ideas;
};

struct BaselineSet {
  Benchmark benchmark = Benchmark::kAut;
  std::string method = "LLM Discussion";
  std::vector<BaselineTask> tasks;

  const BaselineTask* Find(std::string_view task_id) const;
};

// {"benchmark": ..., "tasks": [{"task_id": ..., "prompt": ...}]}
TaskSet TasksFromJson(const nlohmann::json& j);
TaskSet LoadTasks(const std::filesystem::path& path);
// {"benchmark": ..., "method": ..., "tasks": [{"task_id": ..., "ideas": [...]}]}
BaselineSet BaselineFromJson(const nlohmann::json& j);
BaselineSet LoadBaseline(const std::filesystem::path& path);

// Throws ConfigError("baseline coverage gap: <task_id>") for the first task
// without baseline ideas, and for baseline tasks unknown to the task set.
void CheckCoverage(const TaskSet& tasks, const BaselineSet& baseline);

struct TaskMetrics {
  std::string task_id;
  eval::MetricReport metrics;
  // Ideas whose re-judging failed; excluded from `metrics`.
  size_t unevaluated = 0;
};

// Per-benchmark aggregate: equal-weight mean and population std over the
// per-task values.
struct MetricSummary {
  eval::MeanStd originality;
  eval::MeanStd elaboration;
  eval::MeanStd fluency;
  eval::MeanStd flexibility;
};

MetricSummary Aggregate(std::span<const eval::MetricReport> per_task);

struct MethodRow {
  std::string method;
  MetricSummary summary;
  std::vector<TaskMetrics> tasks;
};

struct BenchmarkSection {
  Benchmark benchmark = Benchmark::kAut;
  // Ours rows (latest iteration first), then the baseline row.
  std::vector<MethodRow> rows;
};

struct BenchmarkReport {
  std::string config_hash;
  std::vector<BenchmarkSection> sections;
};

// "Ours" for single-iteration runs; otherwise "Ours (1 iter.)" for the
// first iteration and "Ours (k iter)" after that.
std::string MethodLabel(int iteration, int total_iterations);

// Backends for one task; `seeds` are the task's baseline ideas.
using BackendProvider = std::function<gateway::Backends(
    const Task& task, const std::vector<std::string>& seeds)>;

// Per task: run the pipeline seeded with the baseline ideas, merge each
// iteration's cumulative accepts into the baseline, re-judge the merged set
// with the same judge, and compute metrics. Errors carry the task id.
BenchmarkSection RunBenchmark(const TaskSet& tasks, const BaselineSet& baseline,
                              const RunConfig& config,
                              const BackendProvider& backends,
                              const projector::ProjectorWeights& projector);

// Fixed-width table: BENCHMARK, METHOD, then "mean std" per metric with
// three decimals.
std::string RenderTable(const BenchmarkReport& report);

nlohmann::json ToJson(const BenchmarkReport& report);
BenchmarkReport BenchmarkReportFromJson(const nlohmann::json& j);

}  // namespace ideonaut::bench

#endif  // IDEONAUT_BENCH_HARNESS_H_
