/*
 * Copyright 2026 The eqhp Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
// Command-line front end. The entry point writes to caller-supplied streams
// so the whole dispatch is testable in process.
#ifndef EQHP_TOOLS_CLI_H_
#define EQHP_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace eqhp::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

// args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace eqhp::cli

#endif  // EQHP_TOOLS_CLI_H_
