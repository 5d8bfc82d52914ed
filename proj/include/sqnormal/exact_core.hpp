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

#ifndef SQNORMAL_EXACT_CORE_HPP
#define SQNORMAL_EXACT_CORE_HPP

#include <cstddef>

#include <gmpxx.h>

#include "sqnormal/bit_sequence.hpp"
#include "sqnormal/dyadic.hpp"

// Exact binary digit extraction for square roots and for differences between
// dyadic rationals and shifted square roots. Every emitted digit is a
// truncation digit of the true real value; nothing is rounded.
namespace sqnormal {

/// floor(sqrt(m)).
mpz_class isqrt(const mpz_class& m);

bool is_perfect_square(const mpz_class& s);

/// Integer part plus n fractional digits of sqrt(s), i.e. the digits of
/// isqrt(s * 4^n). Rejects s < 2 and perfect squares.
BitSequence sqrt_bits(const mpz_class& s, std::size_t n);

/// n fractional digits of q. Requires q < 4.
BitSequence dyadic_bits(const DyadicRational& q, std::size_t n);

/// n fractional digits of R - sqrt(s)/2^c.
///
/// Requires 0 < R - sqrt(s)/2^c < 1, n >= c and n >= R's log_denominator.
/// Because sqrt(s)/2^c is irrational its ceiling at scale 2^n is floor + 1,
/// so the result is R*2^n - isqrt(s*4^(n-c)) - 1.
BitSequence exact_bits_rational_minus_scaled_sqrt(const DyadicRational& rational,
                                                  std::size_t c,
                                                  const mpz_class& s,
                                                  std::size_t n);

/// n fractional digits of (sqrt(s) - R)/2^c, computed as
/// isqrt(s*4^(n-c)) - R*2^(n-c). Requires 0 < value < 1 and n - c >= R's
/// log_denominator.
BitSequence exact_bits_scaled_sqrt_minus_rational(std::size_t c,
                                                  const mpz_class& s,
                                                  const DyadicRational& rational,
                                                  std::size_t n);

/// The terminating expansion of q rewritten with its terminal 1 replaced by
/// 0 followed by 1s, truncated to n fractional digits (so its value is
/// q - 2^-n). Requires q > 0, q < 4 and n >= q's log_denominator.
BitSequence trailing_ones_form(const DyadicRational& q, std::size_t n);

/// Digit-wise subtraction of sqrt_prefix/2^c from the trailing-1s form of
/// rational, schoolbook borrow from the last digit up.
///
/// sqrt_prefix must carry at least n + c fractional digits. The result holds
/// n fractional digits and agrees with the exact operation on at least the
/// first n - 1 of them (one guard digit).
BitSequence paper_subtraction_procedure(const DyadicRational& rational,
                                        const BitSequence& sqrt_prefix,
                                        std::size_t c, std::size_t n);

/// Number of trailing digits of paper_subtraction_procedure output that are
/// not guaranteed exact.
inline constexpr std::size_t kGuardBits = 1;

/// Every digit d replaced by 1 - d; widths preserved.
BitSequence complement(const BitSequence& b);

}  // namespace sqnormal

#endif  // SQNORMAL_EXACT_CORE_HPP
