// Copyright 2026 The entstruct Authors
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

#ifndef ENTSTRUCT_TOOLS_CLI_H
#define ENTSTRUCT_TOOLS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace entstruct::cli {

constexpr int kExitOk = 0;
constexpr int kExitDataError = 1;
constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). `in` backs `--in -` and a missing
/// `--in`.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

/// Parses "12", "8,12,16", "8..16" or "8..16:2" into a list of sizes. Throws std::invalid_argument.
std::vector<size_t> parse_size_list(const std::string &text);

}  // namespace entstruct::cli

#endif
