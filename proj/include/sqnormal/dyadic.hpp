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

#ifndef SQNORMAL_DYADIC_HPP
#define SQNORMAL_DYADIC_HPP

#include <compare>
#include <cstddef>
#include <string>

#include <gmpxx.h>

namespace sqnormal {

/// A non-negative rational numerator / 2^log_denominator kept in lowest terms
/// (odd numerator, or zero with log_denominator 0).
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(mpz_class numerator, std::size_t log_denominator);

  static DyadicRational integer(unsigned long value) {
    return DyadicRational(mpz_class(value), 0);
  }

  const mpz_class& numerator() const noexcept { return numerator_; }
  std::size_t log_denominator() const noexcept { return log_denominator_; }
  bool is_zero() const noexcept { return numerator_ == 0; }

  /// value * 2^bits; requires bits >= log_denominator.
  mpz_class scaled_to(std::size_t bits) const;

  /// Floor of value * 2^bits, valid for any bits.
  mpz_class floor_scaled(std::size_t bits) const;

  /// "numerator/2^k"
  std::string to_string() const;

  /// Parses "numerator/2^k" or a bare natural.
  static DyadicRational parse(const std::string& text);

  friend DyadicRational operator+(const DyadicRational& a,
                                  const DyadicRational& b);
  /// Throws PreconditionError when b > a.
  friend DyadicRational operator-(const DyadicRational& a,
                                  const DyadicRational& b);
  friend DyadicRational operator*(const DyadicRational& a,
                                  const DyadicRational& b);

  friend bool operator==(const DyadicRational& a,
                         const DyadicRational& b) noexcept {
    return a.log_denominator_ == b.log_denominator_ &&
           a.numerator_ == b.numerator_;
  }
  friend std::strong_ordering operator<=>(const DyadicRational& a,
                                          const DyadicRational& b);

 private:
  mpz_class numerator_ = 0;
  std::size_t log_denominator_ = 0;
};

}  // namespace sqnormal

#endif  // SQNORMAL_DYADIC_HPP
