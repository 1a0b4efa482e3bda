// Copyright 2026 The Synthaudit Authors
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

#ifndef SYNTHAUDIT_TOOLS_COMMANDS_HPP_
#define SYNTHAUDIT_TOOLS_COMMANDS_HPP_

#include <ostream>

namespace synthaudit::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitMetricsFail = 3;
inline constexpr int kExitBasecaseFail = 4;

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace synthaudit::cli

#endif  // SYNTHAUDIT_TOOLS_COMMANDS_HPP_
