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

#include <cmath>
#include <thread>
#include <vector>

#include <doctest.h>

#include "sqnormal/constructions.hpp"
#include "sqnormal/errors.hpp"
#include "sqnormal/exact_core.hpp"

using namespace sqnormal;

TEST_CASE("default_l") {
  CHECK(default_l(2) == 2);
  CHECK(default_l(3) == 2);
  CHECK(default_l(5) == 3);
  CHECK(default_l(7) == 3);
  CHECK(default_l(8) == 4);
  for (std::uint64_t s = 2; s < 200; ++s) {
    std::size_t l = default_l(s);
    CHECK((std::uint64_t{1} << l) > s);
    CHECK((std::uint64_t{1} << (l - 1)) <= s);
  }
}

TEST_CASE("build_construction for s = 2, l = 2") {
  ConstructionSet cs = build_construction(2, 2, 16);
  CHECK(cs.omega1.truncated(8).to_string() == "0.11101001");
  CHECK(cs.omega2.truncated(8).to_string() == "0.00011010");
  CHECK(cs.omega2.to_string() == "0.0001101010000010");
  CHECK(cs.nu2.to_string() == "0.0000001010111110");
  CHECK(cs.rational1 == DyadicRational(129, 7));  // 1 + 2/256
  CHECK(cs.rational2 == DyadicRational(3, 4));
  CHECK(cs.omega1.scaled_value().get_d() / 65536 ==
        doctest::Approx(1 - std::sqrt(2.0) / 16).epsilon(1e-4));
  CHECK(cs.omega2.scaled_value().get_d() / 65536 ==
        doctest::Approx(0.103553).epsilon(1e-4));

  auto report = verify_value_identities(cs);
  CHECK(report.difference == DyadicRational(105, 7));
  CHECK(report.expected == DyadicRational(105, 7));
  CHECK(report.nu1_in_square);
  CHECK(report.nu2_in_square);
}

TEST_CASE("build_construction defaults and errors") {
  CHECK(build_construction(5, std::nullopt, 64).l == 3);
  CHECK_THROWS_AS(build_construction(9, std::nullopt, 64), PreconditionError);
  CHECK_THROWS_AS(build_construction(5, 2, 64), PreconditionError);  // 2^2 <= 5
  CHECK_THROWS_AS(build_construction(2, 2, 15), PreconditionError);  // below 8l
  CHECK_NOTHROW(build_construction(2, 2, 16));
}

TEST_CASE("all four values lie strictly in (0,1)") {
  for (std::uint64_t s = 2; s <= 99; ++s) {
    if (is_perfect_square(s)) continue;
    for (std::size_t l = default_l(s); l <= default_l(s) + 3; ++l) {
      ConstructionSet cs = build_construction(s, l, 8 * l + 16);
      for (const BitSequence* b : {&cs.omega1, &cs.omega2, &cs.nu1, &cs.nu2}) {
        CHECK(b->int_width() == 0);
        CHECK(b->scaled_value() > 0);
      }
      CHECK_NOTHROW(verify_value_identities(cs));
    }
  }
}

TEST_CASE("nu1 - nu2 has at most 4l fractional digits") {
  for (std::uint64_t s = 2; s <= 60; ++s) {
    if (is_perfect_square(s)) continue;
    for (std::size_t l = default_l(s); l <= default_l(s) + 2; ++l) {
      ConstructionSet cs = build_construction(s, l, 8 * l);
      auto report = verify_value_identities(cs);
      CHECK(report.difference.log_denominator() <= 4 * l);
    }
  }
}

TEST_CASE("construction digits are prefix stable") {
  for (std::uint64_t s : {2, 3, 5, 6, 7, 10, 31, 47}) {
    std::size_t l = default_l(s);
    std::size_t n = 8 * l + 13;
    ConstructionSet small = build_construction(s, l, n);
    ConstructionSet big = build_construction(s, l, 2 * n);
    CHECK(big.omega1.truncated(n) == small.omega1);
    CHECK(big.omega2.truncated(n) == small.omega2);
    CHECK(big.nu1.truncated(n) == small.nu1);
    CHECK(big.nu2.truncated(n) == small.nu2);
  }
}

TEST_CASE("verify_value_identities detects a flipped digit") {
  ConstructionSet cs = build_construction(2, 2, 64);
  for (std::size_t pos : {1u, 9u, 40u, 64u}) {
    ConstructionSet bad = cs;
    bad.nu1 = cs.nu1.with_flipped(pos);
    CHECK_THROWS_AS(verify_value_identities(bad), VerificationError);
    try {
      verify_value_identities(bad);
    } catch (const VerificationError& e) {
      if (pos > 1) CHECK(e.position() == pos);
    }
  }
  ConstructionSet bad = cs;
  bad.omega2 = cs.omega2.with_flipped(5);
  CHECK_THROWS_AS(verify_value_identities(bad), VerificationError);
}

TEST_CASE("concurrent builds are deterministic") {
  std::vector<ConstructionSet> results(8);
  std::vector<std::thread> workers;
  for (std::size_t i = 0; i < results.size(); ++i) {
    workers.emplace_back([&results, i] { results[i] = build_construction(13, 5, 2048); });
  }
  for (auto& w : workers) w.join();
  for (const auto& r : results) {
    CHECK(r.omega1 == results[0].omega1);
    CHECK(r.nu2 == results[0].nu2);
  }
}
