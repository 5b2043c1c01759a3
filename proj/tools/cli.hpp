// Copyright 2026 The tpqsdp Authors
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

#ifndef TPQSDP_TOOLS_CLI_HPP
#define TPQSDP_TOOLS_CLI_HPP

#include <iosfwd>

namespace tpqsdp::cli {

enum ExitCode : int {
  kOk = 0,
  kInfeasible = 2,
  kConfigError = 3,
  kNumericalError = 4,
};

/// Entry point of the tpqsdp command line tool.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tpqsdp::cli

#endif  // TPQSDP_TOOLS_CLI_HPP
