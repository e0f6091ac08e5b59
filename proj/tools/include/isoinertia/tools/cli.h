// Copyright 2026 The isoinertia Authors
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

#ifndef ISOINERTIA_TOOLS_CLI_H_
#define ISOINERTIA_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace isoinertia::tools {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitViolation = 2;

// Runs one command line (without the program name). Reports go to `out`
// unless --out names a file; diagnostics go to `err`.
//
// Exit codes: 0 when every verdict holds, 2 when some inequality or chain
// link is violated, 1 for malformed input, unmet hypotheses or usage errors.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace isoinertia::tools

#endif  // ISOINERTIA_TOOLS_CLI_H_
