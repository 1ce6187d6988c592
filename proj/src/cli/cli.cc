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

#include "ideonaut/cli/cli.h"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ideonaut/bench/harness.h"
#include "ideonaut/error.h"
#include "ideonaut/eval/metrics.h"
#include "ideonaut/gateway/transport.h"
#include "ideonaut/gateway/wire.h"
#include "ideonaut/hashing.h"
#include "ideonaut/pipeline/ledger.h"
#include "ideonaut/pipeline/pipeline.h"
#include "ideonaut/rng.h"

namespace ideonaut::cli {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::string_view kConfigSnapshotFile = "config.json";
constexpr std::string_view kConfigHashFile = "config_hash.txt";

fs::path Resolve(const fs::path& base_dir, const fs::path& p) {
  if (p.empty() || p.is_absolute()) return p;
  return (base_dir / p).lexically_normal();
}

json ReadJson(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

void WriteText(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw ConfigError("cannot write " + path.string());
}

gateway::SyntheticWorldParams SyntheticFromJson(const json& j) {
  RequireKnownKeys(j,
                   {"seed", "dim", "vocabulary_size", "categories", "anchors",
                    "relevance_radius", "novelty_floor", "anchor_angle_max",
                    "seed_angle_min", "seed_angle_max", "vocabulary_angle_max"},
                   "mock_world.synthetic");
  gateway::SyntheticWorldParams p;
  p.seed = j.value("seed", p.seed);
  p.dim = j.value("dim", p.dim);
  p.vocabulary_size = j.value("vocabulary_size", p.vocabulary_size);
  p.categories = j.value("categories", p.categories);
  p.anchors = j.value("anchors", p.anchors);
  p.relevance_radius = j.value("relevance_radius", p.relevance_radius);
  p.novelty_floor = j.value("novelty_floor", p.novelty_floor);
  p.anchor_angle_max = j.value("anchor_angle_max", p.anchor_angle_max);
  p.seed_angle_min = j.value("seed_angle_min", p.seed_angle_min);
  p.seed_angle_max = j.value("seed_angle_max", p.seed_angle_max);
  p.vocabulary_angle_max = j.value("vocabulary_angle_max", p.vocabulary_angle_max);
  return p;
}

json ToJson(const gateway::SyntheticWorldParams& p) {
  return {{"seed", p.seed},
          {"dim", p.dim},
          {"vocabulary_size", p.vocabulary_size},
          {"categories", p.categories},
          {"anchors", p.anchors},
          {"relevance_radius", p.relevance_radius},
          {"novelty_floor", p.novelty_floor},
          {"anchor_angle_max", p.anchor_angle_max},
          {"seed_angle_min", p.seed_angle_min},
          {"seed_angle_max", p.seed_angle_max},
          {"vocabulary_angle_max", p.vocabulary_angle_max}};
}

std::optional<std::string> BearerToken() {
  const char* token = std::getenv(kTokenEnvVar);
  if (token == nullptr || *token == '\0') return std::nullopt;
  return std::string(token);
}

std::shared_ptr<gateway::Transport> HttpFor(
    const gateway::BackendDescriptor& d) {
  return std::make_shared<gateway::HttpTransport>(d.endpoint, d.timeout,
                                                  BearerToken());
}

// Maps the in-flight exception to an exit code and reports it.
int ReportFailure(std::ostream& err) {
  try {
    throw;
  } catch (const InvariantError& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const BackendError& e) {
    err << "backend error: " << e.what() << "\n";
    return kExitBackend;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const FormatError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InvalidArgumentError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

void PrepareOutputDir(const CliConfig& config) {
  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec) {
    throw ConfigError("cannot create output directory " +
                      config.output_dir.string() + ": " + ec.message());
  }
  WriteText(config.output_dir / kConfigSnapshotFile,
            ToJson(config).dump(2) + "\n");
  WriteText(config.output_dir / kConfigHashFile, ConfigHash(config.run) + "\n");
}

void WriteRunArtifacts(const CliConfig& config, const RunResult& result) {
  WriteLedgerFile(result, config.output_dir / "ledger.jsonl");
  std::string accepted;
  for (const IdeaRecord* r : result.Accepted()) accepted += r->text + "\n";
  WriteText(config.output_dir / "accepted.txt", accepted);
  WriteText(config.output_dir / "result.json", ToJson(result).dump(2) + "\n");
  json iterations = json::array();
  for (const IterationReport& report : result.iterations) {
    iterations.push_back(ToJson(report));
  }
  const json metrics{{"config_hash", result.config_hash},
                     {"stop_reason", result.stop_reason},
                     {"iterations", std::move(iterations)}};
  WriteText(config.output_dir / "metrics.json", metrics.dump(2) + "\n");
}

}  // namespace

CliConfig CliConfigFromJson(const json& j, const fs::path& base_dir) {
  if (!j.is_object()) throw ConfigError("config: expected an object");
  CliConfig config;
  json run = j;
  run.erase("output_dir");
  run.erase("mock_world");
  run.erase("bench");
  config.run = RunConfigFromJson(run);
  config.projector_file = Resolve(base_dir, config.run.projector_path);
  try {
    if (j.contains("output_dir")) {
      config.output_dir = Resolve(base_dir, j.at("output_dir").get<std::string>());
    }
    if (j.contains("mock_world")) {
      const json& w = j.at("mock_world");
      RequireKnownKeys(w, {"synthetic", "path"}, "mock_world");
      if (w.contains("synthetic") == w.contains("path")) {
        throw ConfigError("mock_world: give exactly one of synthetic or path");
      }
      MockWorldSource source;
      if (w.contains("synthetic")) {
        source.synthetic = SyntheticFromJson(w.at("synthetic"));
      } else {
        source.path = Resolve(base_dir, w.at("path").get<std::string>());
      }
      config.mock_world = std::move(source);
    }
    if (j.contains("bench")) {
      if (!j.at("bench").is_array()) throw ConfigError("bench: expected a list");
      for (const json& suite : j.at("bench")) {
        RequireKnownKeys(suite, {"tasks", "baseline"}, "bench");
        config.bench.push_back(
            {.tasks = Resolve(base_dir, suite.at("tasks").get<std::string>()),
             .baseline =
                 Resolve(base_dir, suite.at("baseline").get<std::string>())});
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return config;
}

std::vector<std::string> ReadSeedsFile(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open seeds file " + path.string());
  std::vector<std::string> seeds;
  std::string line;
  while (std::getline(in, line)) {
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    seeds.push_back(line.substr(begin, end - begin + 1));
  }
  if (seeds.empty()) throw ConfigError("seeds file is empty: " + path.string());
  return seeds;
}

void ApplyOverrides(const Overrides& o, CliConfig& config) {
  if (o.seeds_file) config.run.seed_texts = ReadSeedsFile(*o.seeds_file);
  if (o.iterations) config.run.iterations = *o.iterations;
  if (o.rng_seed) config.run.rng_seed = *o.rng_seed;
  if (o.output_dir) config.output_dir = *o.output_dir;
  if (o.encoder_endpoint) config.run.encoder.endpoint = *o.encoder_endpoint;
  if (o.decoder_endpoint) config.run.decoder.endpoint = *o.decoder_endpoint;
  if (o.judge_endpoint) config.run.judge.endpoint = *o.judge_endpoint;
  config.run.Validate();
}

CliConfig LoadCliConfig(const fs::path& path, const Overrides& overrides) {
  CliConfig config = CliConfigFromJson(ReadJson(path), path.parent_path());
  ApplyOverrides(overrides, config);
  return config;
}

json ToJson(const CliConfig& config) {
  json j = ToJson(config.run);
  j["output_dir"] = config.output_dir.string();
  if (config.mock_world) {
    j["mock_world"] = config.mock_world->synthetic
                          ? json{{"synthetic", ToJson(*config.mock_world->synthetic)}}
                          : json{{"path", config.mock_world->path.string()}};
  }
  if (!config.bench.empty()) {
    json bench = json::array();
    for (const BenchSuite& s : config.bench) {
      bench.push_back({{"tasks", s.tasks.string()},
                       {"baseline", s.baseline.string()}});
    }
    j["bench"] = std::move(bench);
  }
  return j;
}

gateway::Backends BuildBackends(
    const RunConfig& config, std::shared_ptr<const gateway::MockWorld> world) {
  const bool any_mock = config.encoder.is_mock() || config.decoder.is_mock() ||
                        config.judge.is_mock();
  gateway::Backends mock;
  if (any_mock) {
    if (!world) throw ConfigError("mock backends need a mock_world section");
    mock = gateway::MakeMockBackends(world);
  }
  gateway::Backends b;
  b.encoder_desc = config.encoder;
  b.decoder_desc = config.decoder;
  b.judge_desc = config.judge;
  b.encoder = config.encoder.is_mock()
                  ? mock.encoder
                  : std::make_shared<gateway::RemoteEncoder>(
                        config.encoder, HttpFor(config.encoder),
                        config.encoder.unit_norm);
  b.decoder = config.decoder.is_mock()
                  ? mock.decoder
                  : std::make_shared<gateway::RemoteDecoder>(
                        config.decoder, HttpFor(config.decoder),
                        config.decoder.token_dim);
  b.judge = config.judge.is_mock()
                ? mock.judge
                : std::make_shared<gateway::RemoteJudge>(config.judge,
                                                         HttpFor(config.judge));
  return b;
}

std::shared_ptr<const gateway::MockWorld> MakeWorld(
    const CliConfig& config, const std::string& objective,
    const std::vector<std::string>& seeds) {
  if (!config.mock_world) return nullptr;
  if (config.mock_world->synthetic) {
    return std::make_shared<const gateway::MockWorld>(gateway::SynthesizeWorld(
        *config.mock_world->synthetic, objective, seeds));
  }
  return std::make_shared<const gateway::MockWorld>(
      gateway::LoadWorldFile(config.mock_world->path));
}

std::optional<size_t> MockDim(const CliConfig& config) {
  if (!config.mock_world) return std::nullopt;
  if (config.mock_world->synthetic) return config.mock_world->synthetic->dim;
  return gateway::LoadWorldFile(config.mock_world->path).dim;
}

projector::ProjectorWeights LoadProjector(const CliConfig& config) {
  const std::optional<size_t> token_dim =
      config.run.decoder.is_mock() ? MockDim(config) : config.run.decoder.token_dim;
  if (config.projector_file.empty()) {
    if (!token_dim) {
      throw ConfigError(
          "the identity projector needs backends.decoder.token_dim");
    }
    return projector::ProjectorWeights::Identity(*token_dim);
  }
  const fs::path& path = config.projector_file;
  if (!fs::exists(path)) {
    throw ConfigError("projector file not found: " + path.string());
  }
  try {
    return projector::LoadWeightsFile(path, token_dim);
  } catch (const FormatError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

int CmdIdeate(const fs::path& config_path, const Overrides& overrides,
              std::ostream& out, std::ostream& err) {
  try {
    const CliConfig config = LoadCliConfig(config_path, overrides);
    config.run.ValidateForRun();
    const std::vector<std::string> seeds =
        config.run.seed_texts.value_or(std::vector<std::string>{});
    const auto world =
        MakeWorld(config, DeriveObjective(config.run.objective, seeds), seeds);
    gateway::Backends backends = BuildBackends(config.run, world);
    projector::ProjectorWeights projector = LoadProjector(config);
    PrepareOutputDir(config);

    IdeationRun run(config.run, std::move(backends), std::move(projector));
    RunResult result;
    try {
      result = run.Run();
    } catch (const BackendError&) {
      // Keep whatever was recorded before the failure.
      WriteLedgerFile(run.Snapshot(), config.output_dir / "ledger.jsonl");
      throw;
    }
    WriteRunArtifacts(config, result);
    out << "config hash: " << result.config_hash << "\n"
        << "iterations: " << result.iterations.size()
        << " (stop: " << result.stop_reason << ")\n"
        << "accepted: " << result.Accepted().size() << "\n"
        << "manifold: " << result.manifold.size() << "\n"
        << "output: " << config.output_dir.string() << "\n";
    return kExitOk;
  } catch (...) {
    return ReportFailure(err);
  }
}

int CmdBench(const fs::path& config_path, const Overrides& overrides,
             std::ostream& out, std::ostream& err) {
  try {
    const CliConfig config = LoadCliConfig(config_path, overrides);
    if (config.bench.empty()) throw ConfigError("config has no bench suites");
    std::vector<std::pair<bench::TaskSet, bench::BaselineSet>> suites;
    for (const BenchSuite& suite : config.bench) {
      bench::TaskSet tasks = bench::LoadTasks(suite.tasks);
      bench::BaselineSet baseline = bench::LoadBaseline(suite.baseline);
      bench::CheckCoverage(tasks, baseline);
      suites.emplace_back(std::move(tasks), std::move(baseline));
    }
    const projector::ProjectorWeights projector = LoadProjector(config);
    PrepareOutputDir(config);

    const bench::BackendProvider provider =
        [&config](const bench::Task& task, const std::vector<std::string>& seeds) {
          CliConfig task_config = config;
          if (task_config.mock_world && task_config.mock_world->synthetic) {
            task_config.mock_world->synthetic->seed = DeriveSeed(
                config.mock_world->synthetic->seed, Fnv1a64(task.task_id));
          }
          return BuildBackends(config.run,
                               MakeWorld(task_config, task.prompt, seeds));
        };
    bench::BenchmarkReport report{.config_hash = ConfigHash(config.run)};
    for (const auto& [tasks, baseline] : suites) {
      report.sections.push_back(
          bench::RunBenchmark(tasks, baseline, config.run, provider, projector));
    }
    const std::string table = bench::RenderTable(report);
    WriteText(config.output_dir / "report.txt", table);
    WriteText(config.output_dir / "report.json",
              bench::ToJson(report).dump(2) + "\n");
    out << table;
    return kExitOk;
  } catch (...) {
    return ReportFailure(err);
  }
}

int CmdReplay(const fs::path& ledger_path,
              const std::optional<std::string>& record_id, std::ostream& out,
              std::ostream& err) {
  std::vector<IdeaRecord> ledger;
  try {
    ledger = ReadLedgerFile(ledger_path);
  } catch (...) {
    return ReportFailure(err);
  }
  std::vector<std::string> ids;
  if (record_id) {
    ids.push_back(*record_id);
  } else {
    for (const IdeaRecord& r : ledger) {
      if (r.status != RecordStatus::kSeed) ids.push_back(r.id);
    }
  }
  int exit_code = kExitOk;
  for (const std::string& id : ids) {
    try {
      const ReplayVerdict verdict = ReplayRecord(ledger, id);
      if (verdict.ok) {
        out << "REPLAY OK " << id << "\n";
      } else {
        out << "REPLAY MISMATCH " << id << ": " << verdict.message << "\n";
        exit_code = 1;
      }
    } catch (const InvalidArgumentError& e) {
      err << e.what() << ": " << id << "\n";
      exit_code = 1;
    }
  }
  return exit_code;
}

int CmdPrintConfig(const fs::path& config_path, const Overrides& overrides,
                   std::ostream& out, std::ostream& err) {
  try {
    const CliConfig config = LoadCliConfig(config_path, overrides);
    out << ToJson(config).dump(2) << "\n";
    return kExitOk;
  } catch (...) {
    return ReportFailure(err);
  }
}

int RunCli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Latent-space idea generation: run, benchmark and audit."};
  app.require_subcommand(1);

  fs::path config_path;
  Overrides overrides;
  std::string seeds_file, output_dir;
  auto add_run_flags = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "Run config (JSON)")->required();
    cmd->add_option("--seeds", seeds_file, "Seed ideas, one per line");
    cmd->add_option("--iterations", overrides.iterations, "Iteration count");
    cmd->add_option("--rng-seed", overrides.rng_seed, "Base RNG seed");
    cmd->add_option("--output-dir", output_dir, "Artifact directory");
    cmd->add_option("--backend-encoder", overrides.encoder_endpoint,
                    "Encoder endpoint URL or mock:");
    cmd->add_option("--backend-decoder", overrides.decoder_endpoint,
                    "Decoder endpoint URL or mock:");
    cmd->add_option("--backend-judge", overrides.judge_endpoint,
                    "Judge endpoint URL or mock:");
  };
  CLI::App* ideate = app.add_subcommand("ideate", "Run the ideation loop");
  add_run_flags(ideate);
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run benchmark suites");
  add_run_flags(bench_cmd);
  CLI::App* print_config =
      app.add_subcommand("print-config", "Print the resolved config");
  add_run_flags(print_config);

  CLI::App* replay = app.add_subcommand(
      "replay", "Rebuild recorded latents from their provenance");
  fs::path ledger_path;
  std::optional<std::string> record_id;
  replay->add_option("ledger", ledger_path, "ledger.jsonl")->required();
  replay->add_option("record_id", record_id,
                     "Record to replay (default: every non-seed record)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }
  if (!seeds_file.empty()) overrides.seeds_file = seeds_file;
  if (!output_dir.empty()) overrides.output_dir = output_dir;

  if (ideate->parsed()) return CmdIdeate(config_path, overrides, out, err);
  if (bench_cmd->parsed()) return CmdBench(config_path, overrides, out, err);
  if (print_config->parsed()) {
    return CmdPrintConfig(config_path, overrides, out, err);
  }
  return CmdReplay(ledger_path, record_id, out, err);
}

}  // namespace ideonaut::cli
