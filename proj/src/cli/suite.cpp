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

#include "sqnormal/cli/suite.hpp"

#include "sqnormal/errors.hpp"

namespace sqnormal::cli {

SuiteResult run_suite(const ConstructionSet& cs, std::size_t min_length) {
  SuiteResult result;
  result.s = cs.s;
  result.l = cs.l;
  result.precision = cs.precision;
  try {
    result.nu_equal = verify_nu_tail_equality(cs, min_length);
    result.omega1 = verify_omega1_complement(cs);
    result.omega2 = verify_omega2_shift(cs);
    result.alignment = alignment_report(cs, min_length);
    result.identities = verify_value_identities(cs);
    result.passed = true;
  } catch (const VerificationError& e) {
    result.failure = e.what();
    result.failure_position = e.position();
  }
  return result;
}

}  // namespace sqnormal::cli
