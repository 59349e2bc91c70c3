// Copyright 2026 The tapcorrect Authors
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

#ifndef TAPCORRECT_CLI_H_
#define TAPCORRECT_CLI_H_

#include <string>
#include <vector>

namespace tapcorrect::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

inline constexpr const char* kVersion = "0.1.0";

// Runs `tapcorrect <subcommand> ...`. `args` excludes the program name.
// Diagnostics go to stderr; data goes to files under --out.
int run(const std::vector<std::string>& args);

}  // namespace tapcorrect::cli

#endif  // TAPCORRECT_CLI_H_
