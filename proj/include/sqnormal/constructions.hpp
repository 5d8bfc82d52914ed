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

#ifndef SQNORMAL_CONSTRUCTIONS_HPP
#define SQNORMAL_CONSTRUCTIONS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "sqnormal/bit_sequence.hpp"
#include "sqnormal/dyadic.hpp"

namespace sqnormal {

/// The four numbers built from a non-square s and an l with 2^l > s:
///
///   omega1 = 1 - sqrt(s)/2^(2l)        nu1 = omega1^2 = (1 + s 2^-4l) - 2^(1-2l) sqrt(s)
///   omega2 = (sqrt(s) - 1)/2^l         nu2 = omega2^2 = (s+1) 2^-2l  - 2^(1-2l) sqrt(s)
///
/// Each digit sequence holds exactly `precision` fractional digits.
struct ConstructionSet {
  std::uint64_t s = 0;
  std::size_t l = 0;
  std::size_t precision = 0;
  BitSequence omega1;
  BitSequence omega2;
  BitSequence nu1;
  BitSequence nu2;
  DyadicRational rational1;  // 1 + s 2^-4l
  DyadicRational rational2;  // (s+1) 2^-2l
  // Set when the digits do not come from sqrt(s) (periodic test inputs).
  bool synthetic = false;
};

/// Smallest l with 2^l > s.
std::size_t default_l(std::uint64_t s);

/// Smallest precision accepted by build_construction for a given l.
constexpr std::size_t min_precision(std::size_t l) { return 8 * l; }

DyadicRational rational_term1(std::uint64_t s, std::size_t l);
DyadicRational rational_term2(std::uint64_t s, std::size_t l);

/// Builds all four digit prefixes by exact subtraction (never by squaring).
/// Throws PreconditionError for perfect-square s, 2^l <= s or n < 8l.
ConstructionSet build_construction(std::uint64_t s, std::optional<std::size_t> l,
                                   std::size_t n);

struct IdentityReport {
  DyadicRational difference;  // nu1 - nu2 as read from the prefixes
  DyadicRational expected;    // 1 + s 2^-4l - (s+1) 2^-2l
  bool nu1_in_square = false;
  bool nu2_in_square = false;
};

/// Checks with exact integer interval arithmetic that each nu prefix is
/// compatible with the square of its omega enclosure, and that nu1 - nu2
/// equals the expected dyadic rational. Throws VerificationError otherwise.
IdentityReport verify_value_identities(const ConstructionSet& cs);

}  // namespace sqnormal

#endif  // SQNORMAL_CONSTRUCTIONS_HPP
