// Copyright 2026 The numsg Authors
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

#ifndef NUMSG_TOOLS_CLI_HPP_
#define NUMSG_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace numsg::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kDomainError = 3;
inline constexpr int kConstructionError = 4;
inline constexpr int kTheoremViolation = 5;

// Runs the command line `args` (without the program name) and returns the
// exit code. Normal output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace numsg::cli

#endif  // NUMSG_TOOLS_CLI_HPP_
