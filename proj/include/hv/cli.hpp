// Copyright 2026 The hv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Each subcommand reads a JSON config, runs one
// experiment, and emits a deterministic report (JSON for single runs, CSV
// for sweeps).

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hv/corpus.hpp"
#include "hv/io.hpp"
#include "hv/learning.hpp"
#include "hv/rational.hpp"

namespace hv {

enum class Command { Value, Design, Market, Verify, Sweep };
const char* to_string(Command c) noexcept;

enum class OutputFormat { Json, Csv };

struct SweepGrid {
  std::vector<Rat> deltas;
  std::vector<Rat> alphas;
  std::vector<int> ts;
};

struct RunConfig {
  Command command = Command::Value;
  std::optional<InformationStructure> structure;
  std::string structure_source;  // "inline" or the file path as given
  std::optional<Rat> delta;
  std::optional<Rat> alpha;
  int t = 1;
  int horizon = 5;
  Rat tolerance = Rat(1, 1000000);
  std::uint64_t seed = 0;
  std::string out;
  OutputFormat format = OutputFormat::Json;
  CorpusOptions corpus;
  SweepGrid sweep;
  SocialValueOptions engine;

  Json echo() const;
};

/// Command-line overrides applied on top of the config file.
struct Overrides {
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  std::optional<int> horizon;
  std::optional<std::string> tolerance;
  std::optional<std::string> format;
};

/// `base_dir` resolves a relative "structure_file".
RunConfig parse_run_config(Command command, const Json& config, const Overrides& overrides,
                           const std::filesystem::path& base_dir = {});

Json run_value(const RunConfig& config);
Json run_design(const RunConfig& config);
Json run_market(const RunConfig& config);

struct VerifyOutcome {
  Json report;
  std::string csv;
  bool all_passed = false;
};
VerifyOutcome run_verify(const RunConfig& config);

/// Plot-ready CSV with '#' comment lines for the config echo and the
/// monotonicity summaries.
std::string run_sweep(const RunConfig& config);

/// Entry point shared by the hv binary and the tests. Exit codes: 0 ok,
/// 1 verification failed, 2 parse, 3 validation, 4 cap, 5 internal.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hv
