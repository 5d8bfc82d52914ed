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

#include "sqnormal/statistics.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string_view>

#include "sqnormal/errors.hpp"
#include "sqnormal/exact_core.hpp"
#include "sqnormal/tail_analysis.hpp"

namespace sqnormal {

namespace {

std::uint64_t parse_u64(std::string_view text, const std::string& context) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw PreconditionError("cannot parse '" + std::string(text) + "' in " +
                            context);
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    auto end = text.find(sep, begin);
    parts.push_back(text.substr(begin, end - begin));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return parts;
}

mpq_class abs_diff(const mpq_class& a, const mpq_class& b) {
  mpq_class d = a - b;
  return d < 0 ? mpq_class(-d) : d;
}

mpq_class ratio(std::uint64_t num, std::uint64_t den) {
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

}  // namespace

SubsequenceSpec SubsequenceSpec::arithmetic(std::uint64_t start,
                                            std::uint64_t step) {
  if (start == 0 || step == 0) {
    throw PreconditionError("arithmetic subsequence needs start >= 1, step >= 1");
  }
  SubsequenceSpec spec;
  spec.kind_ = Kind::kArithmetic;
  spec.start_ = start;
  spec.step_ = step;
  return spec;
}

SubsequenceSpec SubsequenceSpec::geometric(std::uint64_t start,
                                           std::uint64_t ratio_num,
                                           std::uint64_t ratio_den) {
  if (start == 0 || ratio_den == 0 || ratio_num <= ratio_den) {
    throw PreconditionError("geometric subsequence needs start >= 1, ratio > 1");
  }
  SubsequenceSpec spec;
  spec.kind_ = Kind::kGeometric;
  spec.start_ = start;
  std::uint64_t g = std::gcd(ratio_num, ratio_den);
  spec.ratio_num_ = ratio_num / g;
  spec.ratio_den_ = ratio_den / g;
  return spec;
}

SubsequenceSpec SubsequenceSpec::explicit_list(std::vector<std::uint64_t> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 0 || (i > 0 && values[i] <= values[i - 1])) {
      throw PreconditionError(
          "explicit subsequence must be strictly increasing and >= 1");
    }
  }
  SubsequenceSpec spec;
  spec.kind_ = Kind::kExplicit;
  spec.values_ = std::move(values);
  return spec;
}

SubsequenceSpec SubsequenceSpec::parse(const std::string& text) {
  auto parts = split(text, ':');
  const std::string context = "subsequence '" + text + "'";
  if (parts[0] == "arithmetic" && parts.size() == 3) {
    return arithmetic(parse_u64(parts[1], context), parse_u64(parts[2], context));
  }
  if (parts[0] == "geometric" && parts.size() == 3) {
    auto r = split(parts[2], '/');
    if (r.size() > 2) throw PreconditionError("bad ratio in " + context);
    return geometric(parse_u64(parts[1], context), parse_u64(r[0], context),
                     r.size() == 2 ? parse_u64(r[1], context) : 1);
  }
  if (parts[0] == "explicit" && parts.size() == 2) {
    std::vector<std::uint64_t> values;
    for (auto v : split(parts[1], ',')) values.push_back(parse_u64(v, context));
    return explicit_list(std::move(values));
  }
  throw PreconditionError("unknown " + context +
                          " (expected arithmetic:START:STEP, "
                          "geometric:START:RATIO or explicit:N1,N2,...)");
}

std::string SubsequenceSpec::to_string() const {
  switch (kind_) {
    case Kind::kArithmetic:
      return "arithmetic:" + std::to_string(start_) + ":" + std::to_string(step_);
    case Kind::kGeometric: {
      std::string out = "geometric:" + std::to_string(start_) + ":" +
                        std::to_string(ratio_num_);
      if (ratio_den_ != 1) out += "/" + std::to_string(ratio_den_);
      return out;
    }
    case Kind::kExplicit: {
      std::string out = "explicit:";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values_[i]);
      }
      return out;
    }
  }
  return {};
}

std::vector<std::uint64_t> SubsequenceSpec::generate(std::uint64_t limit) const {
  std::vector<std::uint64_t> out;
  switch (kind_) {
    case Kind::kArithmetic:
      for (std::uint64_t v = start_; v <= limit; v += step_) out.push_back(v);
      break;
    case Kind::kGeometric: {
      mpz_class num = 1;
      mpz_class den = 1;
      while (true) {
        // round half up of start num^k / den^k
        mpz_class twice = 2 * mpz_class(start_) * num + den;
        mpz_class value = twice / (2 * den);
        if (value > limit) break;
        std::uint64_t v = value.get_ui();
        if (out.empty() || v > out.back()) out.push_back(v);
        num *= ratio_num_;
        den *= ratio_den_;
      }
      break;
    }
    case Kind::kExplicit:
      for (auto v : values_) {
        if (v > limit) break;
        out.push_back(v);
      }
      break;
  }
  return out;
}

std::uint64_t count_ones(std::span<const Digit> digits, std::size_t chunk_size) {
  if (chunk_size == 0) chunk_size = digits.size() ? digits.size() : 1;
  std::uint64_t total = 0;
  for (std::size_t begin = 0; begin < digits.size(); begin += chunk_size) {
    auto chunk = digits.subspan(begin, std::min(chunk_size, digits.size() - begin));
    total += std::accumulate(chunk.begin(), chunk.end(), std::uint64_t{0});
  }
  return total;
}

std::uint64_t ones_count_prefix(const BitSequence& b, std::size_t n) {
  if (n > b.frac_size()) {
    throw PreconditionError("ones_count_prefix: n = " + std::to_string(n) +
                            " exceeds the " + std::to_string(b.frac_size()) +
                            " available digits");
  }
  return count_ones(b.fraction().first(n));
}

FrequencyCurve frequency_curve(const BitSequence& b,
                               std::span<const std::uint64_t> checkpoints) {
  FrequencyCurve curve;
  auto frac = b.fraction();
  std::uint64_t ones = 0;
  std::uint64_t done = 0;
  for (std::uint64_t n : checkpoints) {
    if (n == 0 || (n <= done && !curve.checkpoints.empty())) {
      throw PreconditionError("frequency_curve: checkpoints must be ascending "
                              "and positive");
    }
    if (n > frac.size()) {
      throw PreconditionError("frequency_curve: checkpoint " + std::to_string(n) +
                              " exceeds the " + std::to_string(frac.size()) +
                              " available digits");
    }
    ones += count_ones(frac.subspan(done, n - done));
    done = n;
    curve.checkpoints.push_back({n, ones, ratio(ones, n)});
  }
  return curve;
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 16; n <= limit; n *= 2) out.push_back(n);
  return out;
}

LimsupEstimate limsup_estimate(const BitSequence& b, const SubsequenceSpec& spec,
                               std::size_t burn_in) {
  const auto indices = spec.generate(b.frac_size());
  if (indices.size() < burn_in + 2) {
    throw PreconditionError(
        "limsup_estimate: " + std::to_string(indices.size()) +
        " subsequence indices fit in the available digits, need at least " +
        std::to_string(burn_in + 2));
  }
  std::vector<std::uint64_t> used(indices.begin() + static_cast<long>(burn_in),
                                  indices.end());
  FrequencyCurve curve = frequency_curve(b, used);
  LimsupEstimate est;
  est.burn_in = burn_in;
  est.first_k = burn_in;
  est.last_k = indices.size() - 1;
  est.sup_observed = curve.checkpoints.front().f;
  est.inf_observed = curve.checkpoints.front().f;
  for (const auto& c : curve.checkpoints) {
    if (c.f > est.sup_observed) est.sup_observed = c.f;
    if (c.f < est.inf_observed) est.inf_observed = c.f;
  }
  est.values = std::move(curve.checkpoints);
  return est;
}

bool complement_pair_check(const BitSequence& b, std::size_t n) {
  return complement_pair_check(b, complement(b), n);
}

bool complement_pair_check(const BitSequence& b, const BitSequence& b_complement,
                           std::size_t n) {
  if (b.frac_size() != b_complement.frac_size()) {
    throw PreconditionError("complement_pair_check: sequences differ in length");
  }
  return ones_count_prefix(b, n) + ones_count_prefix(b_complement, n) == n;
}

std::pair<BitSequence, std::size_t> sqrt_interval_bits(const BitSequence& nu_prefix) {
  auto ints = nu_prefix.digits().first(nu_prefix.int_width());
  if (std::any_of(ints.begin(), ints.end(), [](Digit d) { return d != 0; })) {
    throw PreconditionError("sqrt_interval_bits: nu must lie in [0,1)");
  }
  const std::size_t m = nu_prefix.frac_size();
  const mpz_class a = nu_prefix.scaled_value();
  const mpz_class lo = isqrt(a << m);
  mpz_class hi = isqrt((a + 1) << m);
  const mpz_class top = mpz_class(1) << m;
  if (hi >= top) hi = top - 1;  // sqrt(nu) < 1

  mpz_class diff = lo ^ hi;
  const std::size_t forced =
      diff == 0 ? m : m - mpz_sizeinbase(diff.get_mpz_t(), 2);
  BitSequence digits = BitSequence::from_scaled(lo, m, "sqrt(" +
                                                           nu_prefix.origin() + ")");
  return {digits.truncated(forced), forced};
}

mpq_class h_n_value(const BitSequence& nu_prefix, std::size_t n) {
  if (n == 0) throw PreconditionError("h_n_value: n must be positive");
  auto [forced, count] = sqrt_interval_bits(nu_prefix);
  if (count < n) {
    throw PreconditionError("h_n_value: nu prefix forces only " +
                            std::to_string(count) + " digits of sqrt(nu), need " +
                            std::to_string(n) + "; supply a longer prefix");
  }
  return ratio(ones_count_prefix(forced, n), n);
}

bool RelationReport::all_within_bound() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const RelationRow& r) { return r.within_bound; });
}

RelationReport paper_relation_report(const ConstructionSet& cs,
                                     const SubsequenceSpec& spec,
                                     std::size_t burn_in) {
  RelationReport report;
  report.s = cs.s;
  report.l = cs.l;
  report.precision = cs.precision;
  report.subsequence = spec.to_string();
  report.burn_in = burn_in;
  report.synthetic = cs.synthetic;

  if (cs.synthetic) {
    report.omega1_prefix = 2 * cs.l;
    report.omega2_prefix = cs.l;
  } else {
    report.omega1_prefix = verify_omega1_complement(cs).offset_a - 1;
    report.omega2_prefix = verify_omega2_shift(cs).offset_a - 1;
  }

  const std::size_t limit = std::min(cs.omega1.frac_size(), cs.omega2.frac_size());
  const auto indices = spec.generate(limit);
  if (indices.size() < burn_in + 1) {
    throw PreconditionError("paper_relation_report: no subsequence index past "
                            "burn-in fits in the precision");
  }

  std::optional<std::pair<BitSequence, std::size_t>> forced1;
  std::optional<std::pair<BitSequence, std::size_t>> forced2;
  if (!cs.synthetic) {
    forced1 = sqrt_interval_bits(cs.nu1);
    forced2 = sqrt_interval_bits(cs.nu2);
  }
  auto h_value = [](const auto& forced, std::uint64_t n) -> std::optional<mpq_class> {
    if (!forced || forced->second < n) return std::nullopt;
    return ratio(ones_count_prefix(forced->first, n), n);
  };

  const mpq_class half(1, 2);
  const std::uint64_t slack = report.omega1_prefix + report.omega2_prefix;
  for (std::size_t k = burn_in; k < indices.size(); ++k) {
    const std::uint64_t n = indices[k];
    RelationRow row;
    row.k = k;
    row.n = n;
    row.f_omega1 = ratio(ones_count_prefix(cs.omega1, n), n);
    row.f_omega2 = ratio(ones_count_prefix(cs.omega2, n), n);
    row.h_nu1 = h_value(forced1, n);
    row.h_nu2 = h_value(forced2, n);
    row.sum = row.f_omega1 + row.f_omega2;
    row.deviation = abs_diff(row.sum, 1);
    row.bound = ratio(slack, n);
    row.omega1_distance = abs_diff(row.f_omega1, half);
    row.omega2_distance = abs_diff(row.f_omega2, half);
    row.within_bound = row.deviation <= row.bound;
    report.rows.push_back(std::move(row));
  }
  return report;
}

ConstructionSet synthetic_construction(std::size_t l, std::size_t n,
                                       const std::vector<Digit>& pattern) {
  if (pattern.empty() || l == 0 || n <= 2 * l) {
    throw PreconditionError("synthetic_construction: need a pattern and n > 2l");
  }
  auto periodic = [&](std::size_t lead, Digit lead_digit, Digit flip) {
    std::vector<Digit> digits(lead, lead_digit);
    for (std::size_t i = 0; digits.size() < n; ++i) {
      digits.push_back(pattern[i % pattern.size()] ^ flip);
    }
    return digits;
  };
  ConstructionSet cs;
  cs.l = l;
  cs.precision = n;
  cs.synthetic = true;
  cs.omega1 = BitSequence(0, periodic(2 * l, 1, 1), "synthetic omega1");
  cs.omega2 = BitSequence(0, periodic(l, 0, 0), "synthetic omega2");
  return cs;
}

}  // namespace sqnormal
