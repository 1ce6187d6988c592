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

#ifndef IDEONAUT_PIPELINE_LEDGER_H_
#define IDEONAUT_PIPELINE_LEDGER_H_

#include <filesystem>
#include <iosfwd>
#include <json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "ideonaut/eval/metrics.h"
#include "ideonaut/pipeline/idea_record.h"
#include "ideonaut/pipeline/pipeline.h"

namespace ideonaut {

inline constexpr std::string_view kLedgerSchema = "ideonaut.ledger/1";
inline constexpr std::string_view kRunResultSchema = "ideonaut.run/1";

nlohmann::json ToJson(const ScoreCard& card);
ScoreCard ScoreCardFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const eval::MetricReport& report);
nlohmann::json ToJson(const IdeaRecord& record);
IdeaRecord IdeaRecordFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const IterationReport& report);
nlohmann::json ToJson(const RunResult& result);

// JSONL: a header line, one line per record, one per iteration summary,
// and a closing line with the stop reason. Every line carries the schema
// tag and the config hash.
void WriteLedger(const RunResult& result, std::ostream& out);
void WriteLedgerFile(const RunResult& result, const std::filesystem::path& path);

// Records of a ledger, in file order. Throws FormatError.
std::vector<IdeaRecord> ReadLedgerRecords(std::istream& in);
std::vector<IdeaRecord> ReadLedgerFile(const std::filesystem::path& path);

struct ReplayVerdict {
  bool ok = false;
  std::string message;
};

// Rebuilds `id`'s explorer latent from its parents and provenance and
// compares it bit-for-bit with the recorded latent. Throws
// InvalidArgumentError("record not found") for an unknown id.
ReplayVerdict ReplayRecord(std::span<const IdeaRecord> ledger,
                           std::string_view id);

}  // namespace ideonaut

#endif  // IDEONAUT_PIPELINE_LEDGER_H_
