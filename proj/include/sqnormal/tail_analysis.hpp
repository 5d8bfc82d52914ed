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

#ifndef SQNORMAL_TAIL_ANALYSIS_HPP
#define SQNORMAL_TAIL_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <string_view>

#include "sqnormal/bit_sequence.hpp"
#include "sqnormal/constructions.hpp"

namespace sqnormal {

enum class Relation { kEqual, kComplement };

std::string_view to_string(Relation relation);

/// A verified tail relation between fractional digits of two sequences:
/// A[offset_a + j] relates to B[offset_b + j] for 0 <= j < verified_length.
/// Offsets are 1-based fractional positions.
struct TailMatch {
  std::size_t offset_a = 0;
  std::size_t offset_b = 0;
  Relation relation = Relation::kEqual;
  std::size_t verified_length = 0;
  // Index r into the fractional digits s_1 s_2 ... of sqrt(s) that lines up
  // with offset_a, when that is meaningful.
  std::optional<std::size_t> alignment_index;

  friend bool operator==(const TailMatch&, const TailMatch&) = default;
};

/// True iff the relation holds on every position of the given window.
bool relation_holds(const BitSequence& a, const BitSequence& b,
                    Relation relation, std::size_t offset_a,
                    std::size_t offset_b, std::size_t length);

/// Searches offsets 1..max_offset in both sequences for a tail relation that
/// holds over the whole remaining overlap, which must be at least min_length.
/// Picks the smallest offset_a + offset_b, then the smallest offset_a.
std::optional<TailMatch> find_tail_match(const BitSequence& a,
                                         const BitSequence& b,
                                         Relation relation,
                                         std::size_t max_offset,
                                         std::size_t min_length);

/// Largest allowed start of the common nu tail.
constexpr std::size_t max_nu_offset(std::size_t l) { return 4 * l + 2; }

/// Equal-relation match between nu1 and nu2 starting at the first position
/// from which the two are equal to each other and both are the complement of
/// sqrt(s)/2^(2l-1). Offsets are equal; alignment_index is the sqrt digit
/// index at that position. The last digit of each pipeline is a guard digit
/// and is excluded.
TailMatch verify_nu_tail_equality(const ConstructionSet& cs,
                                  std::size_t min_length);

/// omega1 against sqrt(s): digit j of omega1 is 1 - digit j of
/// sqrt(s)/2^(2l) at every position. The returned match starts at s_1.
TailMatch verify_omega1_complement(const ConstructionSet& cs);

/// omega2 against sqrt(s): omega2 digit l + j equals s_j for all j >= 1, and
/// digits 1..l are the integer part of sqrt(s) - 1.
TailMatch verify_omega2_shift(const ConstructionSet& cs);

struct AlignmentReport {
  TailMatch nu_equal;
  TailMatch nu1_complement;  // nu1 against fractional digits of sqrt(s)
  TailMatch nu2_complement;
  std::size_t common_position = 0;  // fractional position in both nu
  std::size_t common_r = 0;         // sqrt digit index at common_position
  std::size_t shift = 0;            // position - index, shared by nu1 and nu2
};

/// Finds each nu's complement alignment to sqrt(s) independently and checks
/// they use the same index r at the common tail position.
AlignmentReport alignment_report(const ConstructionSet& cs,
                                 std::size_t min_length);

/// The comparison step of alignment_report on already found matches. Throws
/// VerificationError on misalignment.
AlignmentReport check_alignment(const TailMatch& nu_equal,
                                const TailMatch& nu1_complement,
                                const TailMatch& nu2_complement);

}  // namespace sqnormal

#endif  // SQNORMAL_TAIL_ANALYSIS_HPP
