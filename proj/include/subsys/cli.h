// Copyright 2026 The subsys Authors
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

#ifndef SUBSYS_CLI_H
#define SUBSYS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace subsys {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

/// JSON text with object keys sorted, two-space indent, integers exact and
/// floating-point values in fixed notation with six decimals.
std::string to_stable_json(const nlohmann::json &value);

/// Runs the command line `args` (args[0] is the program name). Reports go
/// to `out`, diagnostics to `err`. Returns kExitOk, kExitValidation or
/// kExitUsage.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace subsys

#endif
