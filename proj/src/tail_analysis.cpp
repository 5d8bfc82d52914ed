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

#include "sqnormal/tail_analysis.hpp"

#include <algorithm>
#include <string>

#include "sqnormal/errors.hpp"
#include "sqnormal/exact_core.hpp"

namespace sqnormal {

std::string_view to_string(Relation relation) {
  return relation == Relation::kEqual ? "equal" : "complement";
}

bool relation_holds(const BitSequence& a, const BitSequence& b,
                    Relation relation, std::size_t offset_a,
                    std::size_t offset_b, std::size_t length) {
  if (offset_a == 0 || offset_b == 0) return false;
  if (offset_a - 1 + length > a.frac_size() ||
      offset_b - 1 + length > b.frac_size()) {
    return false;
  }
  auto fa = a.fraction().subspan(offset_a - 1, length);
  auto fb = b.fraction().subspan(offset_b - 1, length);
  const Digit flip = relation == Relation::kComplement ? 1 : 0;
  for (std::size_t j = 0; j < length; ++j) {
    if (fa[j] != (fb[j] ^ flip)) return false;
  }
  return true;
}

std::optional<TailMatch> find_tail_match(const BitSequence& a,
                                         const BitSequence& b,
                                         Relation relation,
                                         std::size_t max_offset,
                                         std::size_t min_length) {
  const std::size_t len_a = a.frac_size();
  const std::size_t len_b = b.frac_size();
  for (std::size_t sum = 2; sum <= 2 * max_offset; ++sum) {
    std::size_t first = sum > max_offset ? sum - max_offset : 1;
    std::size_t last = std::min(sum - 1, max_offset);
    for (std::size_t oa = first; oa <= last; ++oa) {
      const std::size_t ob = sum - oa;
      if (oa > len_a || ob > len_b) continue;
      const std::size_t overlap = std::min(len_a - oa + 1, len_b - ob + 1);
      if (overlap == 0 || overlap < min_length) continue;
      if (relation_holds(a, b, relation, oa, ob, overlap)) {
        return TailMatch{oa, ob, relation, overlap, std::nullopt};
      }
    }
  }
  return std::nullopt;
}

namespace {

std::string where(const ConstructionSet& cs) {
  return "s = " + std::to_string(cs.s) + ", l = " + std::to_string(cs.l);
}

// Last position where a[j] and b[j] break the relation (same index in both),
// or 0 if the relation holds everywhere in the common length.
std::size_t last_violation(const BitSequence& a, const BitSequence& b,
                           Relation relation) {
  const Digit flip = relation == Relation::kComplement ? 1 : 0;
  auto fa = a.fraction();
  auto fb = b.fraction();
  for (std::size_t j = std::min(fa.size(), fb.size()); j > 0; --j) {
    if (fa[j - 1] != (fb[j - 1] ^ flip)) return j;
  }
  return 0;
}

std::size_t first_violation(const BitSequence& a, const BitSequence& b,
                            Relation relation) {
  const Digit flip = relation == Relation::kComplement ? 1 : 0;
  auto fa = a.fraction();
  auto fb = b.fraction();
  const std::size_t len = std::min(fa.size(), fb.size());
  for (std::size_t j = 0; j < len; ++j) {
    if (fa[j] != (fb[j] ^ flip)) return j + 1;
  }
  return 0;
}

std::size_t usable_digits(const ConstructionSet& cs) {
  if (cs.precision <= kGuardBits) {
    throw PreconditionError(where(cs) + ": precision leaves no usable digits");
  }
  return cs.precision - kGuardBits;
}

void require_precision(const ConstructionSet& cs) {
  if (cs.precision < min_precision(cs.l)) {
    throw PreconditionError(where(cs) + ": precision " +
                            std::to_string(cs.precision) + " is below 8l");
  }
}

BitSequence root_digits(const ConstructionSet& cs) {
  return sqrt_bits(mpz_class(cs.s), cs.precision);
}

// Fractional digits s_1 s_2 ... of sqrt(s), as a pure fraction.
BitSequence root_fraction(const BitSequence& root, std::size_t usable) {
  auto frac = root.fraction().first(usable);
  return BitSequence(0, std::vector<Digit>(frac.begin(), frac.end()),
                     root.origin() + " fraction");
}

}  // namespace

TailMatch verify_nu_tail_equality(const ConstructionSet& cs,
                                  std::size_t min_length) {
  require_precision(cs);
  const std::size_t usable = usable_digits(cs);
  const BitSequence nu1 = cs.nu1.truncated(usable);
  const BitSequence nu2 = cs.nu2.truncated(usable);
  const std::size_t bound = max_nu_offset(cs.l);
  if (usable < bound || usable - bound + 1 < min_length) {
    throw PreconditionError(where(cs) + ": precision " +
                            std::to_string(cs.precision) +
                            " cannot guarantee a verified tail of " +
                            std::to_string(min_length) + " digits");
  }

  auto equal = find_tail_match(nu1, nu2, Relation::kEqual, bound, min_length);
  if (!equal || equal->offset_a != equal->offset_b) {
    std::size_t pos = last_violation(nu1, nu2, Relation::kEqual);
    throw VerificationError(where(cs) + ": nu1 and nu2 tails differ at position " +
                                std::to_string(pos) + " (beyond offset bound " +
                                std::to_string(bound) + ")",
                            pos);
  }

  // Both nu are R - sqrt(s)/2^(2l-1); past R's last digit they must be the
  // digit-wise complement of the shifted root.
  const std::size_t c = 2 * cs.l - 1;
  const BitSequence shifted = root_digits(cs).shifted_right(c).truncated(usable);
  std::size_t start = equal->offset_a;
  const DyadicRational* terms[] = {&cs.rational1, &cs.rational2};
  const BitSequence* nus[] = {&nu1, &nu2};
  for (int i = 0; i < 2; ++i) {
    std::size_t last = last_violation(*nus[i], shifted, Relation::kComplement);
    if (last > terms[i]->log_denominator()) {
      throw VerificationError(where(cs) + ": nu" + std::to_string(i + 1) +
                                  " is not the complement of the shifted root "
                                  "at position " + std::to_string(last),
                              last);
    }
    start = std::max(start, last + 1);
  }
  if (usable - start + 1 < min_length) {
    throw PreconditionError(where(cs) + ": verified tail shorter than " +
                            std::to_string(min_length));
  }
  return TailMatch{start, start, Relation::kEqual, usable - start + 1,
                   start - c};
}

TailMatch verify_omega1_complement(const ConstructionSet& cs) {
  require_precision(cs);
  const std::size_t usable = usable_digits(cs);
  const std::size_t shift = 2 * cs.l;
  const BitSequence shifted =
      root_digits(cs).shifted_right(shift).truncated(usable);
  const BitSequence omega = cs.omega1.truncated(usable);
  if (std::size_t pos = first_violation(omega, shifted, Relation::kComplement)) {
    throw VerificationError(where(cs) + ": omega1 is not the complement of "
                                        "sqrt(s)/2^(2l) at position " +
                                std::to_string(pos),
                            pos);
  }
  return TailMatch{shift + 1, 1, Relation::kComplement, usable - shift, 1};
}

TailMatch verify_omega2_shift(const ConstructionSet& cs) {
  require_precision(cs);
  const std::size_t usable = usable_digits(cs);
  const BitSequence root = root_digits(cs);
  // sqrt(s) - 1 only touches the integer digits.
  mpz_class one = mpz_class(1) << root.frac_size();
  const BitSequence expected =
      BitSequence::from_scaled(root.scaled_value() - one, root.frac_size())
          .shifted_right(cs.l)
          .truncated(usable);
  const BitSequence omega = cs.omega2.truncated(usable);
  if (std::size_t pos = first_violation(omega, expected, Relation::kEqual)) {
    throw VerificationError(where(cs) + ": omega2 is not (sqrt(s) - 1)/2^l "
                                        "at position " + std::to_string(pos),
                            pos);
  }
  // Independently: the tail from l + 1 is exactly s_1 s_2 ...
  const BitSequence frac = root_fraction(root, usable);
  const std::size_t length = usable - cs.l;
  if (!relation_holds(omega, frac, Relation::kEqual, cs.l + 1, 1, length)) {
    throw VerificationError(where(cs) + ": omega2 tail is not a shift of sqrt(s)");
  }
  return TailMatch{cs.l + 1, 1, Relation::kEqual, length, 1};
}

AlignmentReport check_alignment(const TailMatch& nu_equal,
                                const TailMatch& nu1_complement,
                                const TailMatch& nu2_complement) {
  AlignmentReport report{nu_equal, nu1_complement, nu2_complement, 0, 0, 0};
  if (nu1_complement.offset_a < nu1_complement.offset_b ||
      nu2_complement.offset_a < nu2_complement.offset_b) {
    throw VerificationError("misalignment: nu tail precedes its sqrt digits");
  }
  const std::size_t shift1 = nu1_complement.offset_a - nu1_complement.offset_b;
  const std::size_t shift2 = nu2_complement.offset_a - nu2_complement.offset_b;
  const std::size_t position =
      std::max({nu_equal.offset_a, nu1_complement.offset_a,
                nu2_complement.offset_a});
  if (shift1 != shift2) {
    throw VerificationError(
        "misalignment: at nu position " + std::to_string(position) +
            " nu1 uses sqrt digit " + std::to_string(position - shift1) +
            " but nu2 uses sqrt digit " + std::to_string(position - shift2),
        position);
  }
  report.common_position = position;
  report.shift = shift1;
  report.common_r = position - shift1;
  if (nu_equal.alignment_index && *nu_equal.alignment_index != report.common_r &&
      nu_equal.offset_a == position) {
    throw VerificationError("misalignment: equal-tail index " +
                                std::to_string(*nu_equal.alignment_index) +
                                " differs from complement index " +
                                std::to_string(report.common_r),
                            position);
  }
  return report;
}

AlignmentReport alignment_report(const ConstructionSet& cs,
                                 std::size_t min_length) {
  const TailMatch equal = verify_nu_tail_equality(cs, min_length);
  const std::size_t usable = usable_digits(cs);
  const BitSequence frac = root_fraction(root_digits(cs), usable);
  const std::size_t bound = max_nu_offset(cs.l);

  TailMatch found[2];
  const BitSequence* nus[] = {&cs.nu1, &cs.nu2};
  for (int i = 0; i < 2; ++i) {
    auto m = find_tail_match(nus[i]->truncated(usable), frac,
                             Relation::kComplement, bound, min_length);
    if (!m) {
      throw VerificationError(where(cs) + ": nu" + std::to_string(i + 1) +
                              " has no complement alignment to sqrt(s) within "
                              "offset " + std::to_string(bound));
    }
    m->alignment_index = m->offset_b;
    found[i] = *m;
  }
  return check_alignment(equal, found[0], found[1]);
}

}  // namespace sqnormal
