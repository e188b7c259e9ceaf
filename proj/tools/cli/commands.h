// Copyright 2026 The mmcodes Authors
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

#ifndef MMCODES_CLI_COMMANDS_H
#define MMCODES_CLI_COMMANDS_H

#include <cstddef>
#include <iosfwd>

namespace mmcodes::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Largest Koszul length the CLI accepts unless --max-t raises it.
inline constexpr size_t kDefaultMaxT = 6;

/// Entry point of the mmcodes tool. Normal output goes to `out`, diagnostics to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace mmcodes::cli

#endif
