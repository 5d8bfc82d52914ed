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

#ifndef SQNORMAL_TESTS_ORACLES_HPP
#define SQNORMAL_TESTS_ORACLES_HPP

// Slow reference implementations used as independent referees. None of them
// call into the library's digit pipelines or mpz_sqrt.

#include <cstdint>
#include <span>
#include <string>

#include <gmpxx.h>

namespace oracle {

/// floor(sqrt(m)) by bisection on [0, 2^(bits/2 + 1)].
inline mpz_class binary_search_isqrt(const mpz_class& m) {
  mpz_class lo = 0;
  mpz_class hi = mpz_class(1) << (mpz_sizeinbase(m.get_mpz_t(), 2) / 2 + 1);
  // invariant: lo^2 <= m < hi^2
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) >> 1;
    if (mid * mid <= m) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

/// Restoring (pencil-and-paper) binary square root of s: returns the integer
/// digits, a '.', and n fractional digits.
inline std::string restoring_sqrt_digits(unsigned long s, std::size_t n) {
  // Bring down pairs of bits of s * 4^n, most significant pair first.
  mpz_class x = mpz_class(s) << (2 * n);
  std::size_t pairs = (mpz_sizeinbase(x.get_mpz_t(), 2) + 1) / 2;
  mpz_class remainder = 0;
  mpz_class root = 0;
  std::string digits;
  for (std::size_t i = pairs; i-- > 0;) {
    mpz_class pair = (x >> (2 * i)) & 3;
    remainder = (remainder << 2) + pair;
    mpz_class trial = (root << 2) + 1;
    root <<= 1;
    if (remainder >= trial) {
      remainder -= trial;
      root += 1;
      digits.push_back('1');
    } else {
      digits.push_back('0');
    }
  }
  digits.erase(0, digits.find('1'));
  digits.insert(digits.size() - n, ".");
  return digits;
}

/// Ones in a 0/1 digit span, one digit at a time.
inline std::uint64_t naive_count(std::span<const std::uint8_t> digits) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] == 1) ++count;
  }
  return count;
}

}  // namespace oracle

#endif  // SQNORMAL_TESTS_ORACLES_HPP
