// Copyright 2026 The bellsep Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "report.hpp"

namespace bellsep::cli {

struct CommandResult {
  int status = kExitOk;
  std::string output;                    // one record per line, stdout
  std::vector<std::string> diagnostics;  // stderr, one message per entry
};

CommandResult cmd_classify(const StateInput& input, bool allow_invalid);
CommandResult cmd_decompose(const StateInput& input);
CommandResult cmd_canonicalize(const StateInput& input);
CommandResult cmd_spectrum(const StateInput& input, bool allow_invalid);
CommandResult cmd_verify(const StateInput& input, const std::string& decomposition_text);

enum class Region { kTetrahedron, kCube };

/// Draws t vectors, runs classify / decompose / verify with every invariant
/// check on each, and emits one summary record. Deterministic in the seed.
CommandResult cmd_sample(long long count, std::uint64_t seed, Region region);

/// Full command-line entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bellsep::cli
