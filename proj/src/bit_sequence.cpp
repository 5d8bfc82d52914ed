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

#include "sqnormal/bit_sequence.hpp"

#include <algorithm>
#include <utility>

#include "sqnormal/errors.hpp"

namespace sqnormal {

BitSequence::BitSequence(std::size_t int_width, std::vector<Digit> digits,
                         std::string origin)
    : int_width_(int_width), digits_(std::move(digits)),
      origin_(std::move(origin)) {
  if (int_width_ > digits_.size()) {
    throw PreconditionError("BitSequence: int_width exceeds digit count");
  }
  for (Digit d : digits_) {
    if (d > 1) throw PreconditionError("BitSequence: digit is not 0 or 1");
  }
}

BitSequence BitSequence::from_scaled(const mpz_class& scaled,
                                     std::size_t frac_bits,
                                     std::string origin) {
  if (scaled < 0) throw PreconditionError("BitSequence: negative value");
  std::string text = scaled == 0 ? std::string() : scaled.get_str(2);
  std::size_t width = text.size() > frac_bits ? text.size() - frac_bits : 0;
  std::vector<Digit> digits(width + frac_bits, 0);
  // right-align the binary string
  std::size_t pad = digits.size() - text.size();
  for (std::size_t i = 0; i < text.size(); ++i) {
    digits[pad + i] = static_cast<Digit>(text[i] - '0');
  }
  BitSequence out;
  out.int_width_ = width;
  out.digits_ = std::move(digits);
  out.origin_ = std::move(origin);
  return out;
}

BitSequence BitSequence::parse(std::string_view text, std::string origin) {
  auto dot = text.find('.');
  std::string_view int_part = dot == std::string_view::npos ? text : text.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view() : text.substr(dot + 1);
  if (int_part == "0") int_part = {};
  std::vector<Digit> digits;
  digits.reserve(int_part.size() + frac_part.size());
  for (std::string_view part : {int_part, frac_part}) {
    for (char ch : part) {
      if (ch != '0' && ch != '1') {
        throw PreconditionError("BitSequence: invalid digit in '" +
                                std::string(text) + "'");
      }
      digits.push_back(static_cast<Digit>(ch - '0'));
    }
  }
  return BitSequence(int_part.size(), std::move(digits), std::move(origin));
}

Digit BitSequence::frac(std::size_t j) const {
  if (j == 0 || j > frac_size()) {
    throw PreconditionError("BitSequence: fractional index " +
                            std::to_string(j) + " out of range");
  }
  return digits_[int_width_ + j - 1];
}

mpz_class BitSequence::scaled_value() const {
  if (digits_.empty()) return 0;
  std::string text(digits_.size(), '0');
  std::transform(digits_.begin(), digits_.end(), text.begin(),
                 [](Digit d) { return static_cast<char>('0' + d); });
  return mpz_class(text, 2);
}

BitSequence BitSequence::truncated(std::size_t frac_bits) const {
  if (frac_bits > frac_size()) {
    throw PreconditionError("BitSequence: cannot truncate to more digits");
  }
  BitSequence out = *this;
  out.digits_.resize(int_width_ + frac_bits);
  return out;
}

BitSequence BitSequence::with_flipped(std::size_t j) const {
  (void)frac(j);
  BitSequence out = *this;
  out.digits_[int_width_ + j - 1] ^= 1;
  return out;
}

BitSequence BitSequence::shifted_right(std::size_t shift) const {
  if (shift < int_width_) {
    throw PreconditionError("BitSequence: shift smaller than integer width");
  }
  BitSequence out;
  out.digits_.assign(shift - int_width_, 0);
  out.digits_.insert(out.digits_.end(), digits_.begin(), digits_.end());
  out.origin_ = origin_.empty() ? origin_ : origin_ + " >> " + std::to_string(shift);
  return out;
}

std::string BitSequence::to_string() const {
  std::string out;
  out.reserve(digits_.size() + 2);
  if (int_width_ == 0) out.push_back('0');
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i == int_width_) out.push_back('.');
    out.push_back(static_cast<char>('0' + digits_[i]));
  }
  if (frac_size() == 0) out.push_back('.');
  return out;
}

}  // namespace sqnormal
