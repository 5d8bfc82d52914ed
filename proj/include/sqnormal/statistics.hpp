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

#ifndef SQNORMAL_STATISTICS_HPP
#define SQNORMAL_STATISTICS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "sqnormal/bit_sequence.hpp"
#include "sqnormal/constructions.hpp"

namespace sqnormal {

/// Index sequence n_1 < n_2 < ... used for subsequence frequencies.
class SubsequenceSpec {
 public:
  enum class Kind { kArithmetic, kGeometric, kExplicit };

  /// n_k = start + step k
  static SubsequenceSpec arithmetic(std::uint64_t start, std::uint64_t step);
  /// n_k = round(start (num/den)^k), ratio > 1; repeated values are skipped.
  static SubsequenceSpec geometric(std::uint64_t start, std::uint64_t ratio_num,
                                   std::uint64_t ratio_den = 1);
  static SubsequenceSpec explicit_list(std::vector<std::uint64_t> values);

  /// "geometric:16:2", "geometric:16:3/2", "arithmetic:2:2", "explicit:4,8,16"
  static SubsequenceSpec parse(const std::string& text);
  std::string to_string() const;

  Kind kind() const noexcept { return kind_; }

  /// All n_k <= limit, in order.
  std::vector<std::uint64_t> generate(std::uint64_t limit) const;

 private:
  Kind kind_ = Kind::kGeometric;
  std::uint64_t start_ = 16;
  std::uint64_t step_ = 0;
  std::uint64_t ratio_num_ = 2;
  std::uint64_t ratio_den_ = 1;
  std::vector<std::uint64_t> values_;
};

struct Checkpoint {
  std::uint64_t n = 0;
  std::uint64_t ones = 0;
  mpq_class f;  // ones / n
};

struct FrequencyCurve {
  std::vector<Checkpoint> checkpoints;
};

struct LimsupEstimate {
  mpq_class sup_observed;
  mpq_class inf_observed;
  std::size_t first_k = 0;  // subsequence indices used: first_k..last_k
  std::size_t last_k = 0;
  std::size_t burn_in = 0;
  std::vector<Checkpoint> values;  // f_{n_k} for the k used
};

/// Ones among digits, summed per chunk; the result does not depend on
/// chunk_size.
std::uint64_t count_ones(std::span<const Digit> digits,
                         std::size_t chunk_size = 1 << 16);

/// Ones among fractional digits 1..n.
std::uint64_t ones_count_prefix(const BitSequence& b, std::size_t n);

/// Exact f_n at each checkpoint; checkpoints must be ascending.
FrequencyCurve frequency_curve(const BitSequence& b,
                               std::span<const std::uint64_t> checkpoints);

/// Powers of two from 2^4 up to limit.
std::vector<std::uint64_t> default_checkpoints(std::uint64_t limit);

/// sup and inf of f_{n_k} over k >= burn_in among the n_k that fit in b.
/// This is a finite surrogate for the limsup along n_k, nothing more.
LimsupEstimate limsup_estimate(const BitSequence& b, const SubsequenceSpec& spec,
                               std::size_t burn_in = 4);

/// ones(b, n) + ones(complement(b), n) == n.
bool complement_pair_check(const BitSequence& b, std::size_t n);
bool complement_pair_check(const BitSequence& b, const BitSequence& b_complement,
                           std::size_t n);

/// Digits of sqrt(nu) forced by an m-digit truncation of nu: the common
/// prefix of isqrt(a 2^m) and isqrt((a+1) 2^m), where a is the prefix as an
/// integer. Returns the forced digits (a pure fraction) and their count.
std::pair<BitSequence, std::size_t> sqrt_interval_bits(const BitSequence& nu_prefix);

/// f_n of the digits of sqrt(nu) forced by nu_prefix. Throws
/// PreconditionError when fewer than n digits are forced.
mpq_class h_n_value(const BitSequence& nu_prefix, std::size_t n);

struct RelationRow {
  std::size_t k = 0;
  std::uint64_t n = 0;
  mpq_class f_omega1;
  mpq_class f_omega2;
  std::optional<mpq_class> h_nu1;  // absent when the nu prefix forces < n digits
  std::optional<mpq_class> h_nu2;
  mpq_class sum;        // f_omega1 + f_omega2
  mpq_class deviation;  // |sum - 1|
  mpq_class bound;      // tail offsets / n
  mpq_class omega1_distance;  // |f_omega1 - 1/2|
  mpq_class omega2_distance;
  bool within_bound = false;
};

struct RelationReport {
  std::uint64_t s = 0;
  std::size_t l = 0;
  std::size_t precision = 0;
  std::string subsequence;
  std::size_t burn_in = 0;
  // Number of leading digits of omega1 and omega2 that precede the sqrt(s)
  // tails (from the tail matches); their sum bounds n |sum - 1|.
  std::size_t omega1_prefix = 0;
  std::size_t omega2_prefix = 0;
  bool synthetic = false;
  std::vector<RelationRow> rows;  // only k >= burn_in

  bool all_within_bound() const;
};

/// Finite analogues of the frequency relations between omega1, omega2 and
/// their squares, along the subsequence. Limits are not computed.
RelationReport paper_relation_report(const ConstructionSet& cs,
                                     const SubsequenceSpec& spec,
                                     std::size_t burn_in = 4);

/// A construction whose sqrt(s) digits are replaced by a periodic pattern:
/// omega1 = complement of the pattern shifted by 2l, omega2 = the pattern
/// shifted by l. nu1/nu2 are left empty. Marked synthetic.
ConstructionSet synthetic_construction(std::size_t l, std::size_t n,
                                       const std::vector<Digit>& pattern);

}  // namespace sqnormal

#endif  // SQNORMAL_STATISTICS_HPP
