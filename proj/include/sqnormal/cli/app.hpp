// Copyright 2026 The sqnormal Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SQNORMAL_CLI_APP_HPP
#define SQNORMAL_CLI_APP_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sqnormal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line (args excludes the program name). Data goes to out
/// unless --out is given; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace sqnormal::cli

#endif  // SQNORMAL_CLI_APP_HPP
