// Copyright 2026 The layerq Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace layerq::cli {

/// Exit codes.
inline constexpr int kAccept = 0;
inline constexpr int kUsage = 1;
inline constexpr int kAbort = 2;
inline constexpr int kTableDiscrepancy = 3;
inline constexpr int kInconclusive = 4;

/// Runs the command line `args` (without the program name), writing to
/// `out` and `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace layerq::cli
