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

#ifndef IDEONAUT_PIPELINE_PIPELINE_H_
#define IDEONAUT_PIPELINE_PIPELINE_H_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ideonaut/eval/metrics.h"
#include "ideonaut/exploration/strategy.h"
#include "ideonaut/gateway/backend.h"
#include "ideonaut/pipeline/idea_record.h"
#include "ideonaut/pipeline/run_config.h"
#include "ideonaut/projector/projector.h"

namespace ideonaut {

// Append-only population that exploration samples from: the seeds plus
// every accepted idea.
class Manifold {
 public:
  explicit Manifold(std::string objective) : objective_(std::move(objective)) {}

  // Throws InvariantError for duplicate ids, records that are neither seeds
  // nor accepted, or records without an embedding.
  void Append(const IdeaRecord& record);

  bool Contains(std::string_view id) const;
  size_t size() const { return entries_.size(); }
  const std::string& objective() const { return objective_; }
  std::span<const exploration::ManifoldEntry> entries() const {
    return entries_;
  }
  std::vector<std::string> ids() const;

 private:
  std::string objective_;
  std::vector<exploration::ManifoldEntry> entries_;
};

struct IterationReport {
  int iteration = 0;
  size_t generated = 0;
  size_t decoded = 0;
  size_t decode_failures = 0;
  size_t judged = 0;
  size_t judge_failures = 0;
  size_t accepted = 0;
  size_t duplicates = 0;
  size_t manifold_size = 0;
  // Count of judged candidates per originality score 1..5.
  std::array<size_t, 5> originality_histogram{};
  size_t relevant = 0;
  // Over the judged candidates of this iteration; absent when none judged.
  std::optional<eval::MetricReport> metrics;
  // Mean originality of every idea accepted so far in the run.
  std::optional<double> accepted_originality_mean;
  std::vector<std::string> record_ids;
};

struct RunResult {
  std::string config_hash;
  std::string objective;
  std::vector<IdeaRecord> records;
  std::vector<std::string> manifold;
  std::vector<IterationReport> iterations;
  std::string stop_reason;

  std::vector<const IdeaRecord*> Accepted() const;
  const IdeaRecord* Find(std::string_view id) const;
};

// Asks the decoder (plain prompt mode) for `n` distinct ideas, one call per
// idea, listing earlier answers so they are not repeated. Gives up after
// 2n calls.
std::vector<std::string> GenerateSeeds(std::string_view objective, int n,
                                       gateway::Decoder& decoder);

// Prompt used by GenerateSeeds.
std::string SeedPrompt(std::string_view objective,
                       std::span<const std::string> already_proposed);

// Judge objective: the problem description, or a one-line summary of the
// seeds when there is none.
std::string DeriveObjective(std::string_view problem,
                            std::span<const std::string> seeds);

// The diverge-evaluate-converge loop. Owns the manifold, the ledger and the
// generator state; decoding and judging fan out up to each backend's
// max_parallel and are ingested in candidate order.
class IdeationRun {
 public:
  IdeationRun(RunConfig config, gateway::Backends backends,
              projector::ProjectorWeights projector,
              std::string task_id = {});

  // Seeds the manifold (generating seeds if none are configured).
  void Initialize();
  // One iteration: expand, project, decode, judge, filter, extend.
  IterationReport RunIteration();
  // Initialize + iterations until the stop rule fires.
  RunResult Run();

  const Manifold& manifold() const { return manifold_; }
  // Snapshot of everything recorded so far, including after a failure.
  RunResult Snapshot() const;
  int iterations_done() const { return iteration_; }
  const std::string& objective() const { return objective_; }

 private:
  void RunStage(int stage, IterationReport& report);
  bool DuplicatesManifold(const IdeaRecord& record) const;

  RunConfig config_;
  gateway::Backends backends_;
  projector::ProjectorWeights projector_;
  std::string task_id_;
  std::string config_hash_;
  std::string objective_;
  bool renormalize_ = false;
  bool initialized_ = false;
  int iteration_ = 0;
  Manifold manifold_{""};
  // Normalized texts of the manifold members, for duplicate checks.
  std::vector<std::string> manifold_texts_;
  std::vector<IdeaRecord> records_;
  std::vector<IterationReport> reports_;
  std::string stop_reason_;
};

// Convenience wrapper around IdeationRun.
RunResult RunPipeline(const RunConfig& config, gateway::Backends backends,
                      projector::ProjectorWeights projector);

}  // namespace ideonaut

#endif  // IDEONAUT_PIPELINE_PIPELINE_H_
