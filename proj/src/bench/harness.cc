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

#include "ideonaut/bench/harness.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <utility>

#include "ideonaut/error.h"
#include "ideonaut/hashing.h"
#include "ideonaut/pipeline/ledger.h"
#include "ideonaut/pipeline/pipeline.h"
#include "ideonaut/rng.h"

namespace ideonaut::bench {
namespace {

using nlohmann::json;

constexpr std::string_view kReportSchema = "ideonaut.bench/1";

json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::string RequireString(const json& j, const char* key,
                          std::string_view context) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) {
    throw FormatError(std::string(context) + ": missing string '" + key + "'");
  }
  return j.at(key).get<std::string>();
}

const json& RequireArray(const json& j, const char* key,
                         std::string_view context) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw FormatError(std::string(context) + ": missing array '" + key + "'");
  }
  return j.at(key);
}

// Rethrows the in-flight exception with the task id prepended, keeping its
// type so the CLI still maps it to the right exit code.
[[noreturn]] void RethrowForTask(const std::string& task_id) {
  const std::string prefix = "task " + task_id + ": ";
  try {
    throw;
  } catch (const ScoringError& e) {
    throw ScoringError(prefix + e.what());
  } catch (const BackendError& e) {
    throw BackendError(prefix + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError(prefix + e.what());
  } catch (const FormatError& e) {
    throw FormatError(prefix + e.what());
  } catch (const InvariantError& e) {
    throw InvariantError(prefix + e.what());
  } catch (const InvalidArgumentError& e) {
    throw InvalidArgumentError(prefix + e.what());
  }
}

// Judges each record once per distinct text and computes metrics over the
// judged subset.
class Scorer {
 public:
  Scorer(gateway::Judge& judge, std::string objective)
      : judge_(judge), objective_(std::move(objective)) {}

  TaskMetrics Score(const std::string& task_id,
                    std::span<const IdeaRecord> records,
                    double cosine_threshold) {
    std::vector<ScoreCard> cards;
    std::vector<eval::DedupItem> items;
    size_t unevaluated = 0;
    for (const IdeaRecord& record : records) {
      const std::optional<ScoreCard> card = CardFor(record.text);
      if (!card) {
        ++unevaluated;
        continue;
      }
      cards.push_back(*card);
      eval::DedupItem item{.text = record.text};
      if (record.embedding.dim() > 0) item.embedding = record.embedding;
      items.push_back(std::move(item));
    }
    if (cards.empty()) {
      throw ScoringError("no idea could be judged");
    }
    const std::vector<size_t> kept = eval::DedupUnique(items, cosine_threshold);
    return TaskMetrics{.task_id = task_id,
                       .metrics = eval::ComputeMetrics(cards, kept),
                       .unevaluated = unevaluated};
  }

 private:
  std::optional<ScoreCard> CardFor(const std::string& text) {
    auto it = cache_.find(text);
    if (it != cache_.end()) return it->second;
    std::optional<ScoreCard> card;
    try {
      card = gateway::JudgeIdea(judge_, text, objective_);
    } catch (const ScoringError&) {
      card.reset();
    }
    cache_.emplace(text, card);
    return card;
  }

  gateway::Judge& judge_;
  std::string objective_;
  std::map<std::string, std::optional<ScoreCard>> cache_;
};

std::string Fixed3(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3f", value);
  return buffer;
}

std::string PadLeft(const std::string& s, size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string PadRight(const std::string& s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

void RTrim(std::string& line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
}

json ToJson(const eval::MeanStd& v) { return {{"mean", v.mean}, {"std", v.std}}; }

eval::MeanStd MeanStdFromJson(const json& j) {
  return {.mean = j.at("mean").get<double>(), .std = j.at("std").get<double>()};
}

eval::MetricReport MetricReportFromJson(const json& j) {
  return eval::MetricReport{
      .originality_mean = j.at("originality_mean").get<double>(),
      .originality_std = j.at("originality_std").get<double>(),
      .elaboration_mean = j.at("elaboration_mean").get<double>(),
      .elaboration_std = j.at("elaboration_std").get<double>(),
      .fluency = j.at("fluency").get<size_t>(),
      .flexibility = j.at("flexibility").get<size_t>(),
      .responses = j.at("responses").get<size_t>()};
}

}  // namespace

std::string_view ToString(Benchmark benchmark) {
  switch (benchmark) {
    case Benchmark::kAut:
      return "AUT";
    case Benchmark::kInstances:
      return "Instances";
    case Benchmark::kSimilarities:
      return "Similarities";
    case Benchmark::kScientific:
      return "Scientific";
  }
  return "?";
}

Benchmark ParseBenchmark(std::string_view name) {
  for (Benchmark b : {Benchmark::kAut, Benchmark::kInstances,
                      Benchmark::kSimilarities, Benchmark::kScientific}) {
    if (name == ToString(b)) return b;
  }
  throw FormatError("unknown benchmark: " + std::string(name));
}

const BaselineTask* BaselineSet::Find(std::string_view task_id) const {
  for (const BaselineTask& task : tasks) {
    if (task.task_id == task_id) return &task;
  }
  return nullptr;
}

TaskSet TasksFromJson(const json& j) {
  TaskSet set;
  set.benchmark = ParseBenchmark(RequireString(j, "benchmark", "tasks"));
  std::set<std::string> seen;
  for (const json& entry : RequireArray(j, "tasks", "tasks")) {
    Task task{.task_id = RequireString(entry, "task_id", "task"),
              .prompt = RequireString(entry, "prompt", "task")};
    if (!seen.insert(task.task_id).second) {
      throw FormatError("duplicate task id: " + task.task_id);
    }
    set.tasks.push_back(std::move(task));
  }
  if (set.tasks.empty()) throw FormatError("no tasks");
  return set;
}

TaskSet LoadTasks(const std::filesystem::path& path) {
  return TasksFromJson(ReadJsonFile(path));
}

BaselineSet BaselineFromJson(const json& j) {
  BaselineSet set;
  set.benchmark = ParseBenchmark(RequireString(j, "benchmark", "baseline"));
  if (j.contains("method")) set.method = RequireString(j, "method", "baseline");
  std::set<std::string> seen;
  for (const json& entry : RequireArray(j, "tasks", "baseline")) {
    BaselineTask task{.task_id = RequireString(entry, "task_id", "baseline")};
    if (!seen.insert(task.task_id).second) {
      throw FormatError("duplicate baseline task id: " + task.task_id);
    }
    for (const json& idea : RequireArray(entry, "ideas", "baseline task")) {
      if (!idea.is_string()) throw FormatError("baseline ideas must be strings");
      task.ideas.push_back(idea.get<std::string>());
    }
    set.tasks.push_back(std::move(task));
  }
  return set;
}

BaselineSet LoadBaseline(const std::filesystem::path& path) {
  return BaselineFromJson(ReadJsonFile(path));
}

void CheckCoverage(const TaskSet& tasks, const BaselineSet& baseline) {
  if (tasks.benchmark != baseline.benchmark) {
    throw ConfigError("baseline is for " + std::string(ToString(baseline.benchmark)) +
                      ", tasks are for " + std::string(ToString(tasks.benchmark)));
  }
  for (const Task& task : tasks.tasks) {
    const BaselineTask* found = baseline.Find(task.task_id);
    if (found == nullptr || found->ideas.empty()) {
      throw ConfigError("baseline coverage gap: " + task.task_id);
    }
  }
  for (const BaselineTask& entry : baseline.tasks) {
    const bool known = std::ranges::any_of(
        tasks.tasks, [&](const Task& t) { return t.task_id == entry.task_id; });
    if (!known) throw ConfigError("baseline coverage gap: " + entry.task_id);
  }
}

MetricSummary Aggregate(std::span<const eval::MetricReport> per_task) {
  if (per_task.empty()) throw InvalidArgumentError("no tasks to aggregate");
  std::vector<double> o, e, fl, fx;
  for (const eval::MetricReport& r : per_task) {
    o.push_back(r.originality_mean);
    e.push_back(r.elaboration_mean);
    fl.push_back(static_cast<double>(r.fluency));
    fx.push_back(static_cast<double>(r.flexibility));
  }
  return MetricSummary{.originality = eval::PopulationMeanStd(o),
                       .elaboration = eval::PopulationMeanStd(e),
                       .fluency = eval::PopulationMeanStd(fl),
                       .flexibility = eval::PopulationMeanStd(fx)};
}

std::string MethodLabel(int iteration, int total_iterations) {
  if (total_iterations <= 1) return "Ours";
  if (iteration == 1) return "Ours (1 iter.)";
  return "Ours (" + std::to_string(iteration) + " iter)";
}

BenchmarkSection RunBenchmark(const TaskSet& tasks, const BaselineSet& baseline,
                              const RunConfig& config,
                              const BackendProvider& backends,
                              const projector::ProjectorWeights& projector) {
  CheckCoverage(tasks, baseline);
  const int total = config.iterations;
  // ours[k-1] holds the per-task metrics after k iterations.
  std::vector<std::vector<TaskMetrics>> ours(static_cast<size_t>(total));
  std::vector<TaskMetrics> base_rows;

  for (const Task& task : tasks.tasks) {
    try {
      const std::vector<std::string>& seeds = baseline.Find(task.task_id)->ideas;
      RunConfig cfg = config;
      cfg.objective = task.prompt;
      cfg.seed_texts = seeds;
      cfg.rng_seed = DeriveSeed(config.rng_seed, Fnv1a64(task.task_id));
      gateway::Backends task_backends = backends(task, seeds);
      gateway::Judge& judge = *task_backends.judge;

      IdeationRun run(cfg, task_backends, projector, task.task_id);
      const RunResult result = run.Run();

      std::vector<IdeaRecord> base_records;
      for (const IdeaRecord& r : result.records) {
        if (r.status == RecordStatus::kSeed) base_records.push_back(r);
      }
      Scorer scorer(judge, run.objective());
      base_rows.push_back(
          scorer.Score(task.task_id, base_records, cfg.dedup_cosine));

      for (int k = 1; k <= total; ++k) {
        std::vector<IdeaRecord> accepted;
        for (const IdeaRecord* r : result.Accepted()) {
          if (r->iteration <= k) accepted.push_back(*r);
        }
        const std::vector<IdeaRecord> merged =
            eval::MergeWithBaseline(base_records, accepted, cfg.dedup_cosine);
        ours[static_cast<size_t>(k - 1)].push_back(
            scorer.Score(task.task_id, merged, cfg.dedup_cosine));
      }
    } catch (const Error&) {
      RethrowForTask(task.task_id);
    }
  }

  auto make_row = [](std::string method, std::vector<TaskMetrics> rows) {
    std::vector<eval::MetricReport> reports;
    for (const TaskMetrics& t : rows) reports.push_back(t.metrics);
    return MethodRow{.method = std::move(method),
                     .summary = Aggregate(reports),
                     .tasks = std::move(rows)};
  };
  BenchmarkSection section{.benchmark = tasks.benchmark};
  for (int k = total; k >= 1; --k) {
    section.rows.push_back(
        make_row(MethodLabel(k, total), std::move(ours[static_cast<size_t>(k - 1)])));
  }
  section.rows.push_back(make_row(baseline.method, std::move(base_rows)));
  return section;
}

std::string RenderTable(const BenchmarkReport& report) {
  static constexpr std::array<std::string_view, 4> kMetricNames = {
      "ORIGINALITY", "ELABORATION", "FLUENCY", "FLEXIBILITY"};
  static constexpr std::string_view kSep = "  ";

  struct Line {
    std::string benchmark;
    std::string method;
    std::array<std::string, 4> mean;
    std::array<std::string, 4> std;
  };
  std::vector<std::vector<Line>> sections;
  size_t bench_w = std::string_view("BENCHMARK").size();
  size_t method_w = std::string_view("METHOD").size();
  std::array<size_t, 4> mean_w{4, 4, 4, 4};
  std::array<size_t, 4> std_w{4, 4, 4, 4};
  for (const BenchmarkSection& section : report.sections) {
    std::vector<Line> lines;
    for (size_t r = 0; r < section.rows.size(); ++r) {
      const MethodRow& row = section.rows[r];
      const std::array<eval::MeanStd, 4> values = {
          row.summary.originality, row.summary.elaboration,
          row.summary.fluency, row.summary.flexibility};
      Line line{.benchmark = r == 0 ? std::string(ToString(section.benchmark))
                                    : std::string(),
                .method = row.method};
      for (size_t m = 0; m < 4; ++m) {
        line.mean[m] = Fixed3(values[m].mean);
        line.std[m] = Fixed3(values[m].std);
        mean_w[m] = std::max(mean_w[m], line.mean[m].size());
        std_w[m] = std::max(std_w[m], line.std[m].size());
      }
      bench_w = std::max(bench_w, line.benchmark.size());
      method_w = std::max(method_w, line.method.size());
      lines.push_back(std::move(line));
    }
    sections.push_back(std::move(lines));
  }
  std::array<size_t, 4> group_w{};
  for (size_t m = 0; m < 4; ++m) {
    group_w[m] = std::max(mean_w[m] + 1 + std_w[m], kMetricNames[m].size());
  }

  auto cells = [&](const std::array<std::string, 4>& mean,
                   const std::array<std::string, 4>& std) {
    std::string out;
    for (size_t m = 0; m < 4; ++m) {
      out += kSep;
      out += PadLeft(PadLeft(mean[m], mean_w[m]) + " " + PadLeft(std[m], std_w[m]),
                     group_w[m]);
    }
    return out;
  };
  std::string header = PadRight("BENCHMARK", bench_w) + std::string(kSep) +
                       PadRight("METHOD", method_w);
  for (size_t m = 0; m < 4; ++m) {
    header += std::string(kSep) + PadLeft(std::string(kMetricNames[m]), group_w[m]);
  }
  std::string subheader = PadRight("", bench_w) + std::string(kSep) +
                          PadRight("", method_w) +
                          cells({"Mean", "Mean", "Mean", "Mean"},
                                {"Std.", "Std.", "Std.", "Std."});
  const std::string rule(header.size(), '-');

  std::string out;
  auto emit = [&out](std::string line) {
    RTrim(line);
    out += line;
    out += '\n';
  };
  emit(header);
  emit(subheader);
  for (const std::vector<Line>& lines : sections) {
    emit(rule);
    for (const Line& line : lines) {
      emit(PadRight(line.benchmark, bench_w) + std::string(kSep) +
           PadRight(line.method, method_w) + cells(line.mean, line.std));
    }
  }
  emit(rule);
  return out;
}

json ToJson(const BenchmarkReport& report) {
  json sections = json::array();
  for (const BenchmarkSection& section : report.sections) {
    json rows = json::array();
    for (const MethodRow& row : section.rows) {
      json tasks = json::array();
      for (const TaskMetrics& t : row.tasks) {
        tasks.push_back({{"task_id", t.task_id},
                         {"metrics", ideonaut::ToJson(t.metrics)},
                         {"unevaluated", t.unevaluated}});
      }
      rows.push_back({{"method", row.method},
                      {"originality", ToJson(row.summary.originality)},
                      {"elaboration", ToJson(row.summary.elaboration)},
                      {"fluency", ToJson(row.summary.fluency)},
                      {"flexibility", ToJson(row.summary.flexibility)},
                      {"tasks", std::move(tasks)}});
    }
    sections.push_back({{"benchmark", ToString(section.benchmark)},
                        {"rows", std::move(rows)}});
  }
  return {{"schema", kReportSchema},
          {"config_hash", report.config_hash},
          {"sections", std::move(sections)}};
}

BenchmarkReport BenchmarkReportFromJson(const json& j) {
  try {
    if (j.at("schema").get<std::string>() != kReportSchema) {
      throw FormatError("unsupported report schema");
    }
    BenchmarkReport report{.config_hash = j.value("config_hash", "")};
    for (const json& s : j.at("sections")) {
      BenchmarkSection section{
          .benchmark = ParseBenchmark(s.at("benchmark").get<std::string>())};
      for (const json& r : s.at("rows")) {
        MethodRow row{.method = r.at("method").get<std::string>(),
                      .summary = {.originality = MeanStdFromJson(r.at("originality")),
                                  .elaboration = MeanStdFromJson(r.at("elaboration")),
                                  .fluency = MeanStdFromJson(r.at("fluency")),
                                  .flexibility = MeanStdFromJson(r.at("flexibility"))}};
        for (const json& t : r.value("tasks", json::array())) {
          row.tasks.push_back(
              TaskMetrics{.task_id = t.at("task_id").get<std::string>(),
                          .metrics = MetricReportFromJson(t.at("metrics")),
                          .unevaluated = t.value("unevaluated", size_t{0})});
        }
        section.rows.push_back(std::move(row));
      }
      report.sections.push_back(std::move(section));
    }
    return report;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bench report: ") + e.what());
  }
}

}  // namespace ideonaut::bench
