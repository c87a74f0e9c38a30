// Copyright 2026 The atanbounds Authors
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

#ifndef ATANBOUNDS_TOOLS_COMMANDS_HPP
#define ATANBOUNDS_TOOLS_COMMANDS_HPP

#include <optional>
#include <ostream>
#include <string>

#include "atanbounds/atanbounds.h"

namespace atanbounds::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Parsed --perturb WHICH:COMPONENT:EPS; the component is multiplied by 1 + eps.
struct Perturbation {
  atb_side side = ATB_LOWER;
  int component = 1;
  double epsilon = 0;
};

/// Throws std::invalid_argument on malformed input.
Perturbation parse_perturbation(const std::string& text);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace atanbounds::cli

#endif  // ATANBOUNDS_TOOLS_COMMANDS_HPP
