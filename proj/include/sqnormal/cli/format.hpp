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

#ifndef SQNORMAL_CLI_FORMAT_HPP
#define SQNORMAL_CLI_FORMAT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "sqnormal/constructions.hpp"
#include "sqnormal/statistics.hpp"

namespace sqnormal::cli {

/// 15 significant digits, printf %g style.
std::string format_decimal(const mpq_class& value);

/// Always "p/q", even for integers.
std::string format_exact(const mpq_class& value);

nlohmann::ordered_json construction_to_json(const ConstructionSet& cs);

/// Inverse of construction_to_json. Throws PreconditionError on malformed
/// input.
ConstructionSet construction_from_json(const nlohmann::json& j);

struct SValues {
  std::vector<std::uint64_t> accepted;
  std::vector<std::uint64_t> perfect_squares;  // filtered out, in input order
};

/// "2..50" (inclusive), "2,3,5", "7" or mixtures such as "2..5,11".
SValues parse_s_values(std::string_view text);

/// Self-contained SVG line chart of f_n against log2 n with a dashed
/// reference line at 1/2.
std::string frequency_svg(const FrequencyCurve& curve, std::string_view title);

}  // namespace sqnormal::cli

#endif  // SQNORMAL_CLI_FORMAT_HPP
