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

#ifndef SQNORMAL_BIT_SEQUENCE_HPP
#define SQNORMAL_BIT_SEQUENCE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace sqnormal {

using Digit = std::uint8_t;

/// A finite exact prefix of a binary expansion.
///
/// Digits are stored most significant first. The first int_width digits are
/// the integer part; fractional digit j (the coefficient of 2^-j, j >= 1) is
/// digits()[int_width + j - 1].
class BitSequence {
 public:
  BitSequence() = default;
  BitSequence(std::size_t int_width, std::vector<Digit> digits,
              std::string origin = {});

  /// Digits of scaled / 2^frac_bits, where scaled is a natural number. The
  /// integer part is as wide as needed (zero width when it is zero).
  static BitSequence from_scaled(const mpz_class& scaled,
                                 std::size_t frac_bits,
                                 std::string origin = {});

  /// Parses the rendered form "101.0011" (or "0.0011"). A lone "0" integer
  /// part parses as int_width 0.
  static BitSequence parse(std::string_view text, std::string origin = {});

  std::size_t int_width() const noexcept { return int_width_; }
  std::size_t size() const noexcept { return digits_.size(); }
  std::size_t frac_size() const noexcept { return digits_.size() - int_width_; }
  const std::string& origin() const noexcept { return origin_; }

  std::span<const Digit> digits() const noexcept { return digits_; }
  std::span<const Digit> fraction() const noexcept {
    return std::span<const Digit>(digits_).subspan(int_width_);
  }

  /// Fractional digit j, 1-based.
  Digit frac(std::size_t j) const;

  /// Integer value of all digits, i.e. value * 2^frac_size.
  mpz_class scaled_value() const;

  /// Copy keeping only the first frac_bits fractional digits.
  BitSequence truncated(std::size_t frac_bits) const;

  /// Copy with fractional digit j inverted (fault injection in tests/CLI).
  BitSequence with_flipped(std::size_t j) const;

  /// This value divided by 2^shift, as a pure fraction (int_width 0).
  /// Requires shift >= int_width.
  BitSequence shifted_right(std::size_t shift) const;

  std::string to_string() const;

  friend bool operator==(const BitSequence& a, const BitSequence& b) noexcept {
    return a.int_width_ == b.int_width_ && a.digits_ == b.digits_;
  }

 private:
  std::size_t int_width_ = 0;
  std::vector<Digit> digits_;
  std::string origin_;
};

}  // namespace sqnormal

#endif  // SQNORMAL_BIT_SEQUENCE_HPP
