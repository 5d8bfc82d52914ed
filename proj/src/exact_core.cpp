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

#include "sqnormal/exact_core.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "sqnormal/errors.hpp"

namespace sqnormal {

namespace {

void require_non_square(const mpz_class& s, const char* op) {
  if (s < 2) {
    throw PreconditionError(std::string(op) + ": s must be at least 2");
  }
  if (is_perfect_square(s)) {
    throw PreconditionError(std::string(op) + ": s = " + s.get_str() +
                            " is a perfect square; the expansion of its root "
                            "terminates (hypothesis: s not a perfect square)");
  }
}

mpz_class pow2(std::size_t k) {
  mpz_class out = 1;
  return out << k;
}

}  // namespace

mpz_class isqrt(const mpz_class& m) {
  if (m < 0) throw PreconditionError("isqrt: negative argument");
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool is_perfect_square(const mpz_class& s) {
  if (s < 0) return false;
  mpz_class r = isqrt(s);
  return r * r == s;
}

BitSequence sqrt_bits(const mpz_class& s, std::size_t n) {
  require_non_square(s, "sqrt_bits");
  mpz_class scaled = s << (2 * n);
  return BitSequence::from_scaled(isqrt(scaled), n,
                                  "sqrt(" + s.get_str() + ")");
}

BitSequence dyadic_bits(const DyadicRational& q, std::size_t n) {
  if (q >= DyadicRational::integer(4)) {
    throw PreconditionError("dyadic_bits: value must be below 4");
  }
  return BitSequence::from_scaled(q.floor_scaled(n), n, q.to_string());
}

BitSequence exact_bits_rational_minus_scaled_sqrt(const DyadicRational& rational,
                                                  std::size_t c,
                                                  const mpz_class& s,
                                                  std::size_t n) {
  require_non_square(s, "exact_bits_rational_minus_scaled_sqrt");
  const std::size_t k = rational.log_denominator();
  if (n < c || n < k) {
    throw PreconditionError(
        "exact_bits_rational_minus_scaled_sqrt: precision below shift or "
        "denominator");
  }
  // R = a/2^k. R > sqrt(s)/2^c  <=>  (a 2^c)^2 > s 4^k.
  const mpz_class& a = rational.numerator();
  const mpz_class rhs = s << (2 * k);
  mpz_class lhs = a << c;
  if (lhs * lhs <= rhs) {
    throw PreconditionError(
        "exact_bits_rational_minus_scaled_sqrt: R - sqrt(s)/2^c is not "
        "positive");
  }
  // R - 1 < sqrt(s)/2^c
  if (a > pow2(k)) {
    mpz_class excess = (a - pow2(k)) << c;
    if (excess * excess >= rhs) {
      throw PreconditionError(
          "exact_bits_rational_minus_scaled_sqrt: value is not below 1");
    }
  }
  mpz_class value = rational.scaled_to(n) - isqrt(s << (2 * (n - c))) - 1;
  return BitSequence::from_scaled(
      value, n,
      rational.to_string() + " - sqrt(" + s.get_str() + ")/2^" +
          std::to_string(c));
}

BitSequence exact_bits_scaled_sqrt_minus_rational(std::size_t c,
                                                  const mpz_class& s,
                                                  const DyadicRational& rational,
                                                  std::size_t n) {
  require_non_square(s, "exact_bits_scaled_sqrt_minus_rational");
  const std::size_t k = rational.log_denominator();
  if (n < c || n - c < k) {
    throw PreconditionError(
        "exact_bits_scaled_sqrt_minus_rational: precision below shift plus "
        "denominator");
  }
  // R < sqrt(s) < R + 2^c, with R = a/2^k.
  const mpz_class& a = rational.numerator();
  const mpz_class rhs = s << (2 * k);
  mpz_class upper = a + (mpz_class(1) << (c + k));
  if (a * a >= rhs || upper * upper <= rhs) {
    throw PreconditionError(
        "exact_bits_scaled_sqrt_minus_rational: (sqrt(s) - R)/2^c is not in "
        "(0,1)");
  }
  mpz_class value = isqrt(s << (2 * (n - c))) - rational.scaled_to(n - c);
  return BitSequence::from_scaled(
      value, n,
      "(sqrt(" + s.get_str() + ") - " + rational.to_string() + ")/2^" +
          std::to_string(c));
}

BitSequence trailing_ones_form(const DyadicRational& q, std::size_t n) {
  if (q.is_zero()) {
    throw PreconditionError("trailing_ones_form: zero has no terminal 1");
  }
  if (q >= DyadicRational::integer(4)) {
    throw PreconditionError("trailing_ones_form: value must be below 4");
  }
  // A,1 000...0 minus one unit in the last place is A,0 111...1.
  return BitSequence::from_scaled(q.scaled_to(n) - 1, n,
                                  q.to_string() + " (trailing 1s)");
}

BitSequence paper_subtraction_procedure(const DyadicRational& rational,
                                        const BitSequence& sqrt_prefix,
                                        std::size_t c, std::size_t n) {
  if (sqrt_prefix.frac_size() < n + c) {
    throw PreconditionError(
        "paper_subtraction_procedure: sqrt prefix has " +
        std::to_string(sqrt_prefix.frac_size()) + " fractional digits, need " +
        std::to_string(n + c));
  }
  if (rational.log_denominator() > n) {
    throw PreconditionError(
        "paper_subtraction_procedure: precision below rational denominator");
  }
  const BitSequence minuend = trailing_ones_form(rational, n);

  // Grid of int_places integer digits followed by n fractional digits.
  const std::size_t sub_int =
      sqrt_prefix.int_width() > c ? sqrt_prefix.int_width() - c : 0;
  const std::size_t int_places = std::max(minuend.int_width(), sub_int) + 1;
  const std::size_t width = int_places + n;
  std::vector<int> top(width, 0);
  std::vector<int> bottom(width, 0);

  auto minuend_digits = minuend.digits();
  for (std::size_t i = 0; i < minuend_digits.size(); ++i) {
    top[int_places - minuend.int_width() + i] = minuend_digits[i];
  }
  // Digit i of sqrt_prefix has fractional position i + c - int_width + 1
  // after dividing by 2^c; positions <= 0 are integer places.
  auto root = sqrt_prefix.digits();
  for (std::size_t i = 0; i < root.size(); ++i) {
    long long pos = static_cast<long long>(i + c) -
                    static_cast<long long>(sqrt_prefix.int_width()) + 1;
    if (pos > static_cast<long long>(n)) break;
    long long cell = static_cast<long long>(int_places) - 1 + pos;
    if (cell < 0) {
      if (root[i] != 0) {
        throw PreconditionError(
            "paper_subtraction_procedure: subtrahend exceeds digit grid");
      }
      continue;
    }
    bottom[static_cast<std::size_t>(cell)] = root[i];
  }

  std::vector<Digit> result(width, 0);
  int borrow = 0;
  for (std::size_t i = width; i-- > 0;) {
    int d = top[i] - bottom[i] - borrow;
    borrow = d < 0 ? 1 : 0;
    result[i] = static_cast<Digit>(d + 2 * borrow);
  }
  if (borrow != 0) {
    throw PreconditionError(
        "paper_subtraction_procedure: rational term is smaller than the "
        "shifted root");
  }
  if (std::any_of(result.begin(), result.begin() + static_cast<long>(int_places),
                  [](Digit d) { return d != 0; })) {
    throw PreconditionError(
        "paper_subtraction_procedure: difference is not below 1");
  }
  std::vector<Digit> frac(result.begin() + static_cast<long>(int_places),
                          result.end());
  return BitSequence(0, std::move(frac),
                     rational.to_string() + " - prefix/2^" + std::to_string(c) +
                         " (digit-wise)");
}

BitSequence complement(const BitSequence& b) {
  auto src = b.digits();
  std::vector<Digit> flipped(src.size());
  std::transform(src.begin(), src.end(), flipped.begin(),
                 [](Digit d) { return static_cast<Digit>(1 - d); });
  return BitSequence(b.int_width(), std::move(flipped),
                     b.origin().empty() ? std::string() : "1 - " + b.origin());
}

}  // namespace sqnormal
