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

#include "ideonaut/pipeline/ledger.h"

#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "ideonaut/error.h"

namespace ideonaut {

using nlohmann::json;

namespace {

json EmbeddingJson(const Embedding& e) {
  if (e.empty()) return nullptr;
  return std::vector<double>(e.values().begin(), e.values().end());
}

Embedding EmbeddingFromJson(const json& j) {
  if (j.is_null()) return Embedding();
  return Embedding(j.get<std::vector<double>>());
}

template <typename T>
json OptionalJson(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

bool BitwiseEqual(const Embedding& a, const Embedding& b) {
  if (a.dim() != b.dim()) return false;
  for (size_t k = 0; k < a.dim(); ++k) {
    if (std::bit_cast<uint64_t>(a[k]) != std::bit_cast<uint64_t>(b[k])) {
      return false;
    }
  }
  return true;
}

json Tagged(std::string_view type, const std::string& config_hash) {
  return json{{"schema", kLedgerSchema},
              {"type", type},
              {"config_hash", config_hash}};
}

}  // namespace

json ToJson(const ScoreCard& card) {
  return json{{"originality", card.originality},
              {"relevant", card.relevant},
              {"elaboration", card.elaboration},
              {"category", card.category}};
}

ScoreCard ScoreCardFromJson(const json& j) {
  ScoreCard card;
  card.originality = j.at("originality").get<int>();
  card.relevant = j.at("relevant").get<bool>();
  card.elaboration = j.at("elaboration").get<int>();
  card.category = j.at("category").get<std::string>();
  card.Validate();
  return card;
}

json ToJson(const eval::MetricReport& r) {
  return json{{"originality_mean", r.originality_mean},
              {"originality_std", r.originality_std},
              {"elaboration_mean", r.elaboration_mean},
              {"elaboration_std", r.elaboration_std},
              {"fluency", r.fluency},
              {"flexibility", r.flexibility},
              {"responses", r.responses}};
}

json ToJson(const IdeaRecord& r) {
  const auto& p = r.provenance;
  json j{{"id", r.id},
         {"task_id", r.task_id},
         {"text", r.text},
         {"embedding", EmbeddingJson(r.embedding)},
         {"latent", r.latent ? EmbeddingJson(*r.latent) : json(nullptr)},
         {"origin", exploration::ToString(p.origin)},
         {"parents", p.parents},
         {"lambda", OptionalJson(p.lambda)},
         {"sigma", OptionalJson(p.sigma)},
         {"noise_seed", OptionalJson(p.noise_seed)},
         {"renormalized", p.renormalized},
         {"iteration", r.iteration},
         {"stage", r.stage},
         {"scores", r.scores ? ToJson(*r.scores) : json(nullptr)},
         {"accepted", r.accepted},
         {"status", ToString(r.status)},
         {"failure", r.failure}};
  return j;
}

IdeaRecord IdeaRecordFromJson(const json& j) {
  try {
    IdeaRecord r;
    r.id = j.at("id").get<std::string>();
    r.task_id = j.value("task_id", "");
    r.text = j.at("text").get<std::string>();
    r.embedding = EmbeddingFromJson(j.at("embedding"));
    if (!j.at("latent").is_null()) r.latent = EmbeddingFromJson(j["latent"]);
    auto& p = r.provenance;
    p.origin = exploration::ParseOrigin(j.at("origin").get<std::string>());
    p.parents = j.at("parents").get<std::vector<std::string>>();
    if (!j.at("lambda").is_null()) p.lambda = j["lambda"].get<double>();
    if (!j.at("sigma").is_null()) p.sigma = j["sigma"].get<double>();
    if (!j.at("noise_seed").is_null()) {
      p.noise_seed = j["noise_seed"].get<uint64_t>();
    }
    p.renormalized = j.at("renormalized").get<bool>();
    r.iteration = j.at("iteration").get<int>();
    r.stage = j.at("stage").get<int>();
    if (!j.at("scores").is_null()) r.scores = ScoreCardFromJson(j["scores"]);
    r.accepted = j.at("accepted").get<bool>();
    r.status = ParseRecordStatus(j.at("status").get<std::string>());
    r.failure = j.value("failure", "");
    return r;
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad ledger record: ") + e.what());
  } catch (const InvalidArgumentError& e) {
    throw FormatError(std::string("bad ledger record: ") + e.what());
  }
}

json ToJson(const IterationReport& r) {
  json j{{"iteration", r.iteration},
         {"generated", r.generated},
         {"decoded", r.decoded},
         {"decode_failures", r.decode_failures},
         {"judged", r.judged},
         {"judge_failures", r.judge_failures},
         {"accepted", r.accepted},
         {"duplicates", r.duplicates},
         {"relevant", r.relevant},
         {"manifold_size", r.manifold_size},
         {"originality_histogram", r.originality_histogram},
         {"metrics", r.metrics ? ToJson(*r.metrics) : json(nullptr)},
         {"accepted_originality_mean",
          OptionalJson(r.accepted_originality_mean)},
         {"record_ids", r.record_ids}};
  return j;
}

json ToJson(const RunResult& result) {
  json records = json::array();
  for (const IdeaRecord& r : result.records) records.push_back(ToJson(r));
  json iterations = json::array();
  for (const IterationReport& r : result.iterations) {
    iterations.push_back(ToJson(r));
  }
  json accepted = json::array();
  for (const IdeaRecord* r : result.Accepted()) accepted.push_back(r->id);
  return json{{"schema", kRunResultSchema},
              {"config_hash", result.config_hash},
              {"objective", result.objective},
              {"stop_reason", result.stop_reason},
              {"manifold", result.manifold},
              {"accepted", accepted},
              {"iterations", iterations},
              {"records", records}};
}

void WriteLedger(const RunResult& result, std::ostream& out) {
  json header = Tagged("header", result.config_hash);
  header["objective"] = result.objective;
  out << header.dump() << '\n';
  for (const IdeaRecord& r : result.records) {
    json line = Tagged("record", result.config_hash);
    line["record"] = ToJson(r);
    out << line.dump() << '\n';
  }
  for (const IterationReport& r : result.iterations) {
    json line = Tagged("iteration", result.config_hash);
    line["report"] = ToJson(r);
    out << line.dump() << '\n';
  }
  json end = Tagged("end", result.config_hash);
  end["stop_reason"] = result.stop_reason;
  out << end.dump() << '\n';
}

void WriteLedgerFile(const RunResult& result,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write ledger: " + path.string());
  WriteLedger(result, out);
}

std::vector<IdeaRecord> ReadLedgerRecords(std::istream& in) {
  std::vector<IdeaRecord> records;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw FormatError("ledger line " + std::to_string(line_number) +
                        " is not a JSON object");
    }
    if (j.value("schema", "") != kLedgerSchema) {
      throw FormatError("ledger line " + std::to_string(line_number) +
                        " has an unknown schema");
    }
    if (j.value("type", "") == "record") {
      records.push_back(IdeaRecordFromJson(j.at("record")));
    }
  }
  return records;
}

std::vector<IdeaRecord> ReadLedgerFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open ledger: " + path.string());
  return ReadLedgerRecords(in);
}

ReplayVerdict ReplayRecord(std::span<const IdeaRecord> ledger,
                           std::string_view id) {
  const auto find = [&](std::string_view wanted) -> const IdeaRecord* {
    for (const IdeaRecord& r : ledger) {
      if (r.id == wanted) return &r;
    }
    return nullptr;
  };
  const IdeaRecord* record = find(id);
  if (record == nullptr) throw InvalidArgumentError("record not found");
  if (record->provenance.origin == exploration::Origin::kSeed) {
    return {false, "seed records have no construction to replay"};
  }
  if (!record->latent) return {false, "record has no stored latent"};
  Embedding rebuilt;
  try {
    rebuilt = exploration::ReplayCandidate(
        record->provenance, [&](const std::string& parent) -> const Embedding& {
          const IdeaRecord* p = find(parent);
          if (p == nullptr || p->embedding.empty()) {
            throw InvalidArgumentError("parent " + parent +
                                       " missing from ledger");
          }
          return p->embedding;
        });
  } catch (const InvalidArgumentError& e) {
    return {false, e.what()};
  }
  if (!BitwiseEqual(rebuilt, *record->latent)) {
    return {false, "reconstructed latent differs from the recorded one"};
  }
  return {true, "latent reproduced bit-for-bit"};
}

}  // namespace ideonaut
