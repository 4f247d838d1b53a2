// Copyright 2026 The k3inst Authors
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

#ifndef K3INST_TOOLS_CLI_H_
#define K3INST_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace k3inst::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInternal = 2;

/// Runs one invocation. `args` excludes the program name. Exit codes: 0 on
/// success (published-table mismatches included), 1 on usage errors, 2 when
/// the math core reports an internal inconsistency.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3inst::cli

#endif  // K3INST_TOOLS_CLI_H_
