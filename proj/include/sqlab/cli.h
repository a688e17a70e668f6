// Copyright 2026 The sqlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SQLAB_CLI_H_
#define SQLAB_CLI_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqlab/error.h"

namespace sqlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;

// Environment variable holding the default worker count.
inline constexpr const char* kWorkersEnv = "SQLAB_WORKERS";

class ConfigError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

enum class OutputFormat { kJson, kCsv, kTable };

struct RunConfig {
  std::string subcommand;
  std::string bound_name;  // `bounds` only
  std::optional<int> n;
  std::optional<int> d;
  std::optional<std::size_t> trials;
  std::optional<std::uint64_t> seed;  // subcommand default when unset
  int workers = 1;
  std::string out;  // JSON-lines file appended to; empty for none
  // json for `simulate`, table elsewhere, unless --format is given.
  OutputFormat format = OutputFormat::kTable;
  // Remaining key=value parameters (eps, tau, mode, ensemble, ...), with
  // '_' normalized to '-'.
  std::map<std::string, std::string> params;
};

// Parses `key = value` lines; '#' starts a comment.
std::map<std::string, std::string> read_config_file(const std::string& path);

// argv without the program name. Throws ConfigError.
RunConfig parse_command_line(const std::vector<std::string>& args);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parse + run with exit-code mapping; what tools/sqlab_main.cc calls.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace sqlab

#endif  // SQLAB_CLI_H_
