// Copyright 2026 The g2nil Authors
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

#ifndef G2NIL_TOOLS_APP_HPP
#define G2NIL_TOOLS_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace g2nil::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,            // success, or the checked property holds
  kExitCheckFailed = 1,   // a verification / predicate failed
  kExitUsage = 2,         // bad flags, unparsable or inconsistent input
};

/// Runs the tool on `args` (without the program name), writing reports to
/// `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace g2nil::cli

#endif  // G2NIL_TOOLS_APP_HPP
