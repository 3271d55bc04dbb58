// Copyright 2026 The dsfuse Authors.
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

#ifndef DSFUSE_TOOLS_CLI_HPP_
#define DSFUSE_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace dsfuse::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitTotalConflict = 3,
};

// Runs one command line (without the program name). Results go to `out`
// only when the command succeeds; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsfuse::cli

#endif  // DSFUSE_TOOLS_CLI_HPP_
