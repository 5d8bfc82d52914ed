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

#include "sqnormal/dyadic.hpp"

#include <algorithm>
#include <utility>

#include "sqnormal/errors.hpp"

namespace sqnormal {

DyadicRational::DyadicRational(mpz_class numerator, std::size_t log_denominator)
    : numerator_(std::move(numerator)), log_denominator_(log_denominator) {
  if (numerator_ < 0) throw PreconditionError("DyadicRational: negative value");
  if (numerator_ == 0) {
    log_denominator_ = 0;
    return;
  }
  std::size_t tz = mpz_scan1(numerator_.get_mpz_t(), 0);
  std::size_t drop = std::min(tz, log_denominator_);
  numerator_ >>= drop;
  log_denominator_ -= drop;
}

mpz_class DyadicRational::scaled_to(std::size_t bits) const {
  if (bits < log_denominator_) {
    throw PreconditionError("DyadicRational: scale below denominator");
  }
  return numerator_ << (bits - log_denominator_);
}

mpz_class DyadicRational::floor_scaled(std::size_t bits) const {
  if (bits >= log_denominator_) return numerator_ << (bits - log_denominator_);
  return numerator_ >> (log_denominator_ - bits);
}

std::string DyadicRational::to_string() const {
  return numerator_.get_str() + "/2^" + std::to_string(log_denominator_);
}

DyadicRational DyadicRational::parse(const std::string& text) {
  auto slash = text.find("/2^");
  try {
    if (slash == std::string::npos) return DyadicRational(mpz_class(text), 0);
    return DyadicRational(mpz_class(text.substr(0, slash)),
                          std::stoul(text.substr(slash + 3)));
  } catch (const std::invalid_argument&) {
    throw PreconditionError("DyadicRational: cannot parse '" + text + "'");
  }
}

namespace {

std::pair<mpz_class, mpz_class> common_scale(const DyadicRational& a,
                                             const DyadicRational& b,
                                             std::size_t k) {
  return {a.scaled_to(k), b.scaled_to(k)};
}

}  // namespace

DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
  std::size_t k = std::max(a.log_denominator_, b.log_denominator_);
  auto [x, y] = common_scale(a, b, k);
  return DyadicRational(x + y, k);
}

DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
  std::size_t k = std::max(a.log_denominator_, b.log_denominator_);
  auto [x, y] = common_scale(a, b, k);
  if (y > x) throw PreconditionError("DyadicRational: negative difference");
  return DyadicRational(x - y, k);
}

DyadicRational operator*(const DyadicRational& a, const DyadicRational& b) {
  return DyadicRational(a.numerator_ * b.numerator_,
                        a.log_denominator_ + b.log_denominator_);
}

std::strong_ordering operator<=>(const DyadicRational& a,
                                 const DyadicRational& b) {
  std::size_t k = std::max(a.log_denominator_, b.log_denominator_);
  int c = cmp(a.scaled_to(k), b.scaled_to(k));
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace sqnormal
