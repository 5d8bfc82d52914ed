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

#include "sqnormal/constructions.hpp"

#include <bit>
#include <string>

#include "sqnormal/errors.hpp"
#include "sqnormal/exact_core.hpp"

namespace sqnormal {

std::size_t default_l(std::uint64_t s) {
  return static_cast<std::size_t>(std::bit_width(s));
}

DyadicRational rational_term1(std::uint64_t s, std::size_t l) {
  return DyadicRational::integer(1) + DyadicRational(mpz_class(s), 4 * l);
}

DyadicRational rational_term2(std::uint64_t s, std::size_t l) {
  return DyadicRational(mpz_class(s) + 1, 2 * l);
}

ConstructionSet build_construction(std::uint64_t s, std::optional<std::size_t> l,
                                   std::size_t n) {
  const mpz_class big_s(s);
  if (s < 2 || is_perfect_square(big_s)) {
    throw PreconditionError("s = " + std::to_string(s) +
                            " is a perfect square (hypothesis: s not a "
                            "perfect square)");
  }
  const std::size_t shift = l.value_or(default_l(s));
  if (shift == 0 || shift < default_l(s)) {
    throw PreconditionError("l = " + std::to_string(shift) +
                            " does not satisfy 2^l > s = " + std::to_string(s));
  }
  if (n < min_precision(shift)) {
    throw PreconditionError("precision " + std::to_string(n) +
                            " is below 8l = " +
                            std::to_string(min_precision(shift)));
  }

  ConstructionSet cs;
  cs.s = s;
  cs.l = shift;
  cs.precision = n;
  cs.rational1 = rational_term1(s, shift);
  cs.rational2 = rational_term2(s, shift);
  const auto one = DyadicRational::integer(1);
  cs.omega1 = exact_bits_rational_minus_scaled_sqrt(one, 2 * shift, big_s, n);
  cs.omega2 = exact_bits_scaled_sqrt_minus_rational(shift, big_s, one, n);
  cs.nu1 = exact_bits_rational_minus_scaled_sqrt(cs.rational1, 2 * shift - 1,
                                                 big_s, n);
  cs.nu2 = exact_bits_rational_minus_scaled_sqrt(cs.rational2, 2 * shift - 1,
                                                 big_s, n);
  return cs;
}

namespace {

// [a, a+1) 2^-n meets [w^2, (w+1)^2] 4^-n.
bool enclosure_meets_square(const BitSequence& nu, const BitSequence& omega,
                            std::size_t n) {
  mpz_class a = nu.scaled_value() << n;
  mpz_class a_next = (nu.scaled_value() + 1) << n;
  mpz_class w = omega.scaled_value();
  mpz_class lo = w * w;
  mpz_class hi = (w + 1) * (w + 1);
  return a <= hi && a_next > lo;
}

}  // namespace

IdentityReport verify_value_identities(const ConstructionSet& cs) {
  const std::size_t n = cs.precision;
  for (const BitSequence* seq : {&cs.omega1, &cs.omega2, &cs.nu1, &cs.nu2}) {
    if (seq->int_width() != 0 || seq->frac_size() != n) {
      throw VerificationError("s = " + std::to_string(cs.s) +
                              ": a constructed value is not a " +
                              std::to_string(n) + "-digit fraction in [0,1)");
    }
  }

  IdentityReport report;
  report.nu1_in_square = enclosure_meets_square(cs.nu1, cs.omega1, n);
  report.nu2_in_square = enclosure_meets_square(cs.nu2, cs.omega2, n);
  report.expected = rational_term1(cs.s, cs.l) - rational_term2(cs.s, cs.l);

  mpz_class diff = cs.nu1.scaled_value() - cs.nu2.scaled_value();
  if (diff < 0) {
    throw VerificationError("s = " + std::to_string(cs.s) +
                            ": nu1 prefix is below nu2 prefix");
  }
  report.difference = DyadicRational(diff, n);

  if (report.difference != report.expected) {
    mpz_class error = abs(diff - report.expected.scaled_to(n));
    // a single flipped digit at position p shifts the difference by 2^(n-p)
    std::size_t low = mpz_scan1(error.get_mpz_t(), 0);
    std::size_t position = low >= n ? 0 : n - low;
    throw VerificationError(
        "s = " + std::to_string(cs.s) + ", l = " + std::to_string(cs.l) +
            ": nu1 - nu2 = " + report.difference.to_string() + ", expected " +
            report.expected.to_string() + " (first mismatch at position " +
            std::to_string(position) + ")",
        position);
  }
  if (!report.nu1_in_square || !report.nu2_in_square) {
    throw VerificationError(
        "s = " + std::to_string(cs.s) + ", l = " + std::to_string(cs.l) +
        ": nu" + (report.nu1_in_square ? "2" : "1") +
        " prefix lies outside the square of the omega enclosure");
  }
  return report;
}

}  // namespace sqnormal
