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

#ifndef SQNORMAL_CLI_SUITE_HPP
#define SQNORMAL_CLI_SUITE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "sqnormal/constructions.hpp"
#include "sqnormal/tail_analysis.hpp"

namespace sqnormal::cli {

struct SuiteResult {
  std::uint64_t s = 0;
  std::size_t l = 0;
  std::size_t precision = 0;
  bool passed = false;
  // on failure
  std::string failure;
  std::size_t failure_position = 0;
  // on success
  TailMatch nu_equal;
  TailMatch omega1;
  TailMatch omega2;
  AlignmentReport alignment;
  IdentityReport identities;
};

/// Default minimum verified tail length: half the precision.
inline std::size_t default_min_length(std::size_t precision) {
  return precision / 2;
}

/// Runs the value identities and all tail verifications on one construction.
/// VerificationError is caught and recorded; PreconditionError propagates.
SuiteResult run_suite(const ConstructionSet& cs, std::size_t min_length);

}  // namespace sqnormal::cli

#endif  // SQNORMAL_CLI_SUITE_HPP
