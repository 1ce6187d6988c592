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

#include "ideonaut/pipeline/pipeline.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

#include "ideonaut/error.h"
#include "ideonaut/gateway/parallel.h"
#include "ideonaut/latent/latent_math.h"
#include "ideonaut/rng.h"

namespace ideonaut {

void Manifold::Append(const IdeaRecord& record) {
  if (Contains(record.id)) {
    throw InvariantError("manifold already holds " + record.id);
  }
  if (record.status != RecordStatus::kSeed && !record.accepted) {
    throw InvariantError("only seeds and accepted ideas join the manifold: " +
                         record.id);
  }
  if (record.embedding.empty()) {
    throw InvariantError("manifold record without embedding: " + record.id);
  }
  entries_.push_back({record.id, record.embedding});
}

bool Manifold::Contains(std::string_view id) const {
  for (const auto& entry : entries_) {
    if (entry.id == id) return true;
  }
  return false;
}

std::vector<std::string> Manifold::ids() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& entry : entries_) out.push_back(entry.id);
  return out;
}

std::vector<const IdeaRecord*> RunResult::Accepted() const {
  std::vector<const IdeaRecord*> out;
  for (const IdeaRecord& r : records) {
    if (r.accepted) out.push_back(&r);
  }
  return out;
}

const IdeaRecord* RunResult::Find(std::string_view id) const {
  for (const IdeaRecord& r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

std::string SeedPrompt(std::string_view objective,
                       std::span<const std::string> already_proposed) {
  std::ostringstream out;
  out << "Propose one new, diverse, high-level idea for the objective below. "
         "Reply with the idea only.\n";
  if (!already_proposed.empty()) {
    out << "Already proposed:\n";
    for (const std::string& s : already_proposed) out << "- " << s << "\n";
  }
  out << "Objective: " << objective;
  return out.str();
}

std::vector<std::string> GenerateSeeds(std::string_view objective, int n,
                                       gateway::Decoder& decoder) {
  if (n < 1) throw InvalidArgumentError("seed count must be positive");
  std::vector<std::string> seeds;
  std::set<std::string> seen;
  const int budget = 2 * n;
  for (int attempt = 0; attempt < budget && std::ssize(seeds) < n; ++attempt) {
    std::string text = decoder.Generate(SeedPrompt(objective, seeds), 64);
    const std::string key = eval::NormalizeText(text);
    if (key.empty() || !seen.insert(key).second) continue;
    seeds.push_back(std::move(text));
  }
  if (std::ssize(seeds) < n) {
    throw BackendError("only " + std::to_string(seeds.size()) +
                       " unique seeds after " + std::to_string(budget) +
                       " attempts");
  }
  return seeds;
}

std::string DeriveObjective(std::string_view problem,
                            std::span<const std::string> seeds) {
  if (!problem.empty()) return std::string(problem);
  std::string out = "Ideas related to: ";
  for (size_t i = 0; i < seeds.size(); ++i) {
    if (i > 0) out += "; ";
    out += seeds[i];
  }
  return out;
}

IdeationRun::IdeationRun(RunConfig config, gateway::Backends backends,
                         projector::ProjectorWeights projector,
                         std::string task_id)
    : config_(std::move(config)),
      backends_(std::move(backends)),
      projector_(std::move(projector)),
      task_id_(std::move(task_id)) {
  config_.ValidateForRun();
  if (!backends_.encoder || !backends_.decoder || !backends_.judge) {
    throw ConfigError("all three backends are required");
  }
  config_hash_ = ConfigHash(config_);
}

void IdeationRun::Initialize() {
  if (initialized_) return;
  const bool pairwise =
      config_.strategy.kind != exploration::StrategyKind::kNoise;
  const size_t needed = pairwise ? 2 : 1;
  std::vector<std::string> seeds;
  if (config_.seed_texts) {
    seeds = *config_.seed_texts;
    if (seeds.size() < needed) {
      throw InvalidArgumentError("insufficient population");
    }
  } else {
    if (static_cast<size_t>(config_.seed_count) < needed) {
      throw InvalidArgumentError("insufficient population");
    }
    seeds = GenerateSeeds(config_.objective, config_.seed_count,
                          *backends_.decoder);
  }
  objective_ = DeriveObjective(config_.objective, seeds);
  manifold_ = Manifold(objective_);
  const std::vector<Embedding> embeddings =
      gateway::EncodeTexts(*backends_.encoder, seeds);
  renormalize_ = config_.renormalize.value_or(backends_.encoder->unit_norm());
  for (size_t i = 0; i < seeds.size(); ++i) {
    IdeaRecord r;
    r.id = "s" + std::to_string(i);
    r.task_id = task_id_;
    r.text = seeds[i];
    r.embedding = embeddings[i];
    r.status = RecordStatus::kSeed;
    manifold_.Append(r);
    manifold_texts_.push_back(eval::NormalizeText(r.text));
    records_.push_back(std::move(r));
  }
  initialized_ = true;
}

bool IdeationRun::DuplicatesManifold(const IdeaRecord& record) const {
  const std::string key = eval::NormalizeText(record.text);
  for (const std::string& t : manifold_texts_) {
    if (t == key) return true;
  }
  const double norm = latent::Norm(record.embedding);
  if (norm == 0.0) return false;
  for (const auto& entry : manifold_.entries()) {
    if (entry.embedding.dim() != record.embedding.dim() ||
        latent::Norm(entry.embedding) == 0.0) {
      continue;
    }
    if (latent::CosineSimilarity(entry.embedding, record.embedding) >=
        config_.dedup_cosine) {
      return true;
    }
  }
  return false;
}

void IdeationRun::RunStage(int stage, IterationReport& report) {
  exploration::StrategyConfig strategy = config_.strategy;
  strategy.rng_seed = DeriveSeed(config_.rng_seed,
                                 static_cast<uint64_t>(iteration_),
                                 static_cast<uint64_t>(stage));
  strategy.renormalize = renormalize_;
  exploration::CandidateBatch batch = exploration::GenerateCandidates(
      manifold_.entries(), strategy, config_.schedule, stage);

  const size_t n = batch.candidates.size();
  const size_t first = records_.size();
  std::vector<projector::ProjectedLatent> projected;
  projected.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    exploration::Candidate& c = batch.candidates[i];
    IdeaRecord r;
    r.id = "c" + std::to_string(iteration_) + "." + std::to_string(stage) +
           "." + std::to_string(i);
    r.task_id = task_id_;
    r.provenance = c.provenance;
    r.iteration = iteration_;
    r.stage = stage;
    projected.push_back(projector::Project(c.embedding, projector_));
    r.latent = std::move(c.embedding);
    report.record_ids.push_back(r.id);
    records_.push_back(std::move(r));
  }
  report.generated += n;

  std::vector<std::string> texts(n);
  std::vector<std::string> decode_errors(n);
  gateway::ParallelFor(n, config_.decoder.max_parallel, [&](size_t i) {
    try {
      texts[i] = gateway::DecodeLatent(
          *backends_.decoder, {projected[i], config_.decode_instruction,
                               config_.max_tokens});
    } catch (const BackendError& e) {
      decode_errors[i] = e.what();
    }
  });

  std::vector<std::optional<ScoreCard>> cards(n);
  std::vector<std::string> judge_errors(n);
  gateway::ParallelFor(n, config_.judge.max_parallel, [&](size_t i) {
    if (!decode_errors[i].empty()) return;
    try {
      cards[i] = gateway::JudgeIdea(*backends_.judge, texts[i], objective_);
    } catch (const BackendError& e) {
      judge_errors[i] = e.what();
    }
  });

  std::vector<size_t> passing;
  for (size_t i = 0; i < n; ++i) {
    IdeaRecord& r = records_[first + i];
    if (!decode_errors[i].empty()) {
      r.status = RecordStatus::kDecodeFailed;
      r.failure = decode_errors[i];
      ++report.decode_failures;
      continue;
    }
    ++report.decoded;
    r.text = texts[i];
    if (!judge_errors[i].empty()) {
      r.status = RecordStatus::kJudgeFailed;
      r.failure = judge_errors[i];
      ++report.judge_failures;
      continue;
    }
    ++report.judged;
    r.scores = cards[i];
    r.status = RecordStatus::kRejected;
    ++report.originality_histogram[static_cast<size_t>(cards[i]->originality - 1)];
    if (cards[i]->relevant) ++report.relevant;
    if (eval::Accept(*cards[i], config_.originality_threshold)) {
      passing.push_back(i);
    }
  }
  // A stage where nothing decodes means the decoder is down, not that the
  // candidates were bad.
  if (n > 0 && std::ranges::none_of(decode_errors,
                                    [](const std::string& e) { return e.empty(); })) {
    throw BackendError("decoder exhausted: every candidate failed (" +
                       decode_errors.front() + ")");
  }
  if (passing.empty()) return;

  std::vector<std::string> passing_texts;
  for (size_t i : passing) passing_texts.push_back(texts[i]);
  const std::vector<Embedding> embeddings =
      gateway::EncodeTexts(*backends_.encoder, passing_texts);
  for (size_t k = 0; k < passing.size(); ++k) {
    IdeaRecord& r = records_[first + passing[k]];
    r.embedding = embeddings[k];
    if (DuplicatesManifold(r)) {
      r.status = RecordStatus::kDuplicate;
      ++report.duplicates;
      continue;
    }
    r.accepted = true;
    r.status = RecordStatus::kAccepted;
    r.Validate(config_.originality_threshold);
    manifold_.Append(r);
    manifold_texts_.push_back(eval::NormalizeText(r.text));
    ++report.accepted;
  }
}

IterationReport IdeationRun::RunIteration() {
  Initialize();
  if (manifold_.size() == 0) throw InvalidArgumentError("empty manifold");
  ++iteration_;
  IterationReport report;
  report.iteration = iteration_;
  const size_t first = records_.size();
  for (int stage = 0; stage < config_.schedule.stages_per_iteration; ++stage) {
    RunStage(stage, report);
  }

  if (report.generated != report.decoded + report.decode_failures ||
      report.judged != report.decoded - report.judge_failures ||
      report.accepted > report.judged) {
    throw InvariantError("ledger accounting identity violated");
  }

  std::vector<ScoreCard> cards;
  std::vector<eval::DedupItem> items;
  for (size_t i = first; i < records_.size(); ++i) {
    const IdeaRecord& r = records_[i];
    if (!r.scores) continue;
    cards.push_back(*r.scores);
    items.push_back({r.text, r.embedding.empty()
                                 ? std::nullopt
                                 : std::optional<Embedding>(r.embedding)});
  }
  if (!cards.empty()) {
    const std::vector<size_t> kept =
        eval::DedupUnique(items, config_.dedup_cosine);
    report.metrics = eval::ComputeMetrics(cards, kept);
  }
  double total = 0.0;
  size_t accepted = 0;
  for (const IdeaRecord& r : records_) {
    if (!r.accepted) continue;
    total += r.scores->originality;
    ++accepted;
  }
  if (accepted > 0) {
    report.accepted_originality_mean = total / static_cast<double>(accepted);
  }
  report.manifold_size = manifold_.size();
  reports_.push_back(report);
  return report;
}

RunResult IdeationRun::Run() {
  Initialize();
  stop_reason_ = "fixed iterations";
  while (iteration_ < config_.iterations) {
    const IterationReport report = RunIteration();
    if (config_.stop == StopRule::kNoNewAccepts && report.accepted == 0) {
      stop_reason_ = "no new accepts";
      break;
    }
  }
  return Snapshot();
}

RunResult IdeationRun::Snapshot() const {
  RunResult result;
  result.config_hash = config_hash_;
  result.objective = objective_;
  result.records = records_;
  result.manifold = manifold_.ids();
  result.iterations = reports_;
  result.stop_reason = stop_reason_;
  return result;
}

RunResult RunPipeline(const RunConfig& config, gateway::Backends backends,
                      projector::ProjectorWeights projector) {
  IdeationRun run(config, std::move(backends), std::move(projector));
  return run.Run();
}

}  // namespace ideonaut
