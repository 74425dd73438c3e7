// Copyright 2026 The abtour Authors
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

#ifndef ABTOUR_CLI_HPP_
#define ABTOUR_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace abtour::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // `test` false, `verify`/`sweep` found violations
inline constexpr int kExitUsage = 2;     // bad flags, unreadable or malformed input
inline constexpr int kExitBudget = 3;    // oracle budget exceeded

// Environment variable overriding the oracle state budget.
inline constexpr const char* kBudgetEnvVar = "ABTOUR_ORACLE_BUDGET";

// Runs one command. `args` excludes the program name. Data goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace abtour::cli

#endif  // ABTOUR_CLI_HPP_
