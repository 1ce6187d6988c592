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

#ifndef IDEONAUT_CLI_CLI_H_
#define IDEONAUT_CLI_CLI_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ideonaut/gateway/backend.h"
#include "ideonaut/gateway/mock_world.h"
#include "ideonaut/pipeline/run_config.h"
#include "ideonaut/projector/projector.h"

namespace ideonaut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitBackend = 2;
inline constexpr int kExitInvariant = 3;

// Bearer token for remote backends.
inline constexpr const char* kTokenEnvVar = "IDEONAUT_TOKEN";

// Command-line values that take precedence over the config file.
struct Overrides {
  std::optional<std::filesystem::path> seeds_file;
  std::optional<int> iterations;
  std::optional<uint64_t> rng_seed;
  std::optional<std::filesystem::path> output_dir;
  std::optional<std::string> encoder_endpoint;
  std::optional<std::string> decoder_endpoint;
  std::optional<std::string> judge_endpoint;
};

// Either synthesized per objective or loaded from a world file.
struct MockWorldSource {
  std::optional<gateway::SyntheticWorldParams> synthetic;
  std::filesystem::path path;
};

struct BenchSuite {
  std::filesystem::path tasks;
  std::filesystem::path baseline;
};

// A RunConfig plus harness plumbing. Relative paths are resolved against
// the config file's directory.
struct CliConfig {
  RunConfig run;
  // run.projector_path resolved; run keeps the path as written so the
  // config hash does not depend on where the file lives.
  std::filesystem::path projector_file;
  std::filesystem::path output_dir = "ideonaut-out";
  std::optional<MockWorldSource> mock_world;
  std::vector<BenchSuite> bench;
};

// Strict: unknown keys anywhere are a ConfigError.
CliConfig CliConfigFromJson(const nlohmann::json& j,
                            const std::filesystem::path& base_dir);
CliConfig LoadCliConfig(const std::filesystem::path& path,
                        const Overrides& overrides);
void ApplyOverrides(const Overrides& overrides, CliConfig& config);
nlohmann::json ToJson(const CliConfig& config);

// Seed file: one idea per non-blank line.
std::vector<std::string> ReadSeedsFile(const std::filesystem::path& path);

// Mock roles are served by `world` (required when any role is mock);
// the others go over HTTP with the IDEONAUT_TOKEN bearer token if set.
gateway::Backends BuildBackends(
    const RunConfig& config, std::shared_ptr<const gateway::MockWorld> world);

// Builds the mock world for one objective and seed list, or nullptr when
// every backend is remote.
std::shared_ptr<const gateway::MockWorld> MakeWorld(
    const CliConfig& config, const std::string& objective,
    const std::vector<std::string>& seeds);

// Dimension of the configured mock world, if any.
std::optional<size_t> MockDim(const CliConfig& config);

// The identity projector when no path is configured. The token width comes
// from the mock world for a mock decoder, else from the decoder's declared
// token_dim. A configured but missing file is a ConfigError naming it.
projector::ProjectorWeights LoadProjector(const CliConfig& config);

int CmdIdeate(const std::filesystem::path& config_path,
              const Overrides& overrides, std::ostream& out,
              std::ostream& err);
int CmdBench(const std::filesystem::path& config_path,
             const Overrides& overrides, std::ostream& out, std::ostream& err);
// Replays one record, or every non-seed record when `record_id` is empty.
int CmdReplay(const std::filesystem::path& ledger_path,
              const std::optional<std::string>& record_id, std::ostream& out,
              std::ostream& err);
int CmdPrintConfig(const std::filesystem::path& config_path,
                   const Overrides& overrides, std::ostream& out,
                   std::ostream& err);

int RunCli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ideonaut::cli

#endif  // IDEONAUT_CLI_CLI_H_
