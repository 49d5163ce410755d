// Copyright 2026 The INGB Authors.
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

#ifndef INGB_CLI_H_
#define INGB_CLI_H_

#include <iosfwd>

namespace ingb::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;        // unreadable input, unwritable output
inline constexpr int kExitContract = 2;  // bad flags or violated preconditions

// Entry point for the `ingb` tool. Subcommands: resample, noise, evaluate,
// bench, gen. Results go to files (or `out`); diagnostics go to `err`.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace ingb::cli

#endif  // INGB_CLI_H_
