// Copyright 2026 The kronkit Authors
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

#ifndef KRONKIT_TOOLS_CLI_HPP_
#define KRONKIT_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kronkit/analysis.hpp"

namespace kronkit::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitSkipped = 3,
};

enum class OutputFormat { kJsonLines, kTable };

struct RunConfig {
  std::string command;
  std::vector<std::string> inline_graphs;  // --g6
  std::vector<std::string> input_paths;    // --input
  bool all_graphs = false;
  std::size_t max_order = 0;
  std::vector<std::size_t> n_values;
  std::uint64_t seed = 0;
  std::uint64_t budget = kDefaultSubsetBudget;
  std::size_t workers = 1;
  OutputFormat format = OutputFormat::kJsonLines;
  std::string output;  // empty = stdout
  Filters filters;
  bool timing = false;
};

// Reads newline-delimited graph6 files in order. Malformed lines become
// BatchItems without a graph whose source is "path:line". Throws
// std::runtime_error if a file cannot be opened.
std::vector<BatchItem> ingest_corpus(const std::vector<std::string>& paths);

// Writes one JSON object per report followed by the summary object, or a
// human-readable table.
void emit_report(const BatchResult& result, OutputFormat format, std::ostream& out);

// Full command-line entry point. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kronkit::cli

#endif  // KRONKIT_TOOLS_CLI_HPP_
