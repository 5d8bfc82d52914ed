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


#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "sqnormal/cli/app.hpp"
#include "sqnormal/cli/format.hpp"
#include "sqnormal/cli/suite.hpp"
#include "sqnormal/errors.hpp"

using namespace sqnormal;
using namespace sqnormal::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("sqnormal_test_" + name);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_CASE("digits") {
  CHECK(invoke({"digits", "2", "8"}).out == "1.01101010\n");
  CHECK(invoke({"digits", "3", "4"}).out == "1.1011\n");

  auto square = invoke({"digits", "4", "8"});
  CHECK(square.code == kExitUsage);
  CHECK(square.out.empty());
  CHECK(square.err.find("square") != std::string::npos);

  CHECK(invoke({"digits", "1", "8"}).code == kExitUsage);
  CHECK(invoke({"digits", "x"}).code == kExitUsage);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  CHECK(invoke({}).code == kExitUsage);
}

TEST_CASE("construct") {
  auto r = invoke({"construct", "2", "--l", "2", "--bits", "16", "--json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["omega2"] == "0.0001101010000010");
  CHECK(j["nu2"] == "0.0000001010111110");
  CHECK(j["s"] == "2");
  CHECK(j["rational_terms"]["nu1"] == "129/2^7");

  auto defaulted = nlohmann::json::parse(invoke({"construct", "2", "--json"}).out);
  CHECK(defaulted["l"] == 2);

  CHECK(invoke({"construct", "9"}).code == kExitUsage);
  CHECK(invoke({"construct", "2", "--l", "1"}).code == kExitUsage);  // 2^l <= s
  CHECK(invoke({"construct", "2", "--bits", "8"}).code == kExitUsage);
}

TEST_CASE("construct output round-trips through JSON") {
  for (const char* s : {"2", "7", "41"}) {
    auto r = invoke({"construct", s, "--bits", "512", "--json"});
    REQUIRE(r.code == kExitOk);
    ConstructionSet parsed = construction_from_json(nlohmann::json::parse(r.out));
    ConstructionSet fresh = build_construction(std::stoull(s), std::nullopt, 512);
    CHECK(parsed.omega1 == fresh.omega1);
    CHECK(parsed.nu2 == fresh.nu2);
    CHECK(parsed.rational1 == fresh.rational1);

    SuiteResult a = run_suite(parsed, default_min_length(512));
    SuiteResult b = run_suite(fresh, default_min_length(512));
    REQUIRE(a.passed);
    REQUIRE(b.passed);
    CHECK(a.nu_equal == b.nu_equal);
    CHECK(a.omega1 == b.omega1);
    CHECK(a.omega2 == b.omega2);
    CHECK(a.alignment.common_r == b.alignment.common_r);
    CHECK(a.identities.difference == b.identities.difference);
  }
  nlohmann::json broken = nlohmann::json::parse(
      invoke({"construct", "2", "--bits", "64", "--json"}).out);
  broken["l"] = 3;
  CHECK_THROWS_AS(construction_from_json(broken), PreconditionError);
}

TEST_CASE("verify") {
  auto r = invoke({"verify", "--s", "2..50", "--bits", "4096"});
  CHECK(r.code == kExitOk);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 1 + 43);  // header plus 49 values minus 6 squares
  CHECK(rows[0].rfind("s,l,n,", 0) == 0);
  CHECK(rows[1].rfind("2,2,4096,8,5,", 0) == 0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    CHECK(rows[i].ends_with(",pass"));
  }
  CHECK(r.err.find("s = 4") != std::string::npos);

  auto small = invoke({"verify", "--s", "2", "--bits", "8"});
  CHECK(small.code == kExitUsage);

  auto flipped = invoke({"verify", "--s", "2..5", "--bits", "256", "--flip", "nu2:37"});
  CHECK(flipped.code == kExitVerificationFailure);
  CHECK(flipped.err.find("position = 37") != std::string::npos);
  CHECK(flipped.err.find("s = 2") != std::string::npos);

  CHECK(invoke({"verify", "--s", "16"}).code == kExitUsage);  // nothing left
  CHECK(invoke({"verify", "--s", "5..3"}).code == kExitUsage);
}

TEST_CASE("verify JSON") {
  auto r = invoke({"verify", "--s", "2,3", "--bits", "256", "--json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_passed"] == true);
  REQUIRE(j["results"].size() == 2);
  CHECK(j["results"][0]["s"] == "2");
  CHECK(j["results"][1]["s"] == "3");
  CHECK(j["results"][0]["nu_tail"]["offset_a"] == 8);
  CHECK(j["results"][0]["nu_tail"]["alignment_index"] == 5);
}

TEST_CASE("freq") {
  auto r = invoke({"freq", "2", "--checkpoints", "4"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out == "n,ones,f_n,f_exact\n4,2,0.5,1/2\n");

  CHECK(invoke({"freq", "2", "--checkpoints", ""}).code == kExitUsage);
  CHECK(invoke({"freq", "2", "--checkpoints", "8192", "--bits", "4096"}).code ==
        kExitUsage);

  auto svg_path = temp_path("freq.svg");
  std::filesystem::remove(svg_path);
  auto plotted = invoke({"freq", "2", "--bits", "65536", "--plot", svg_path.string()});
  REQUIRE(plotted.code == kExitOk);
  std::string svg = slurp(svg_path);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.ends_with("</svg>\n"));
  std::filesystem::remove(svg_path);

  auto rows = lines(plotted.out);
  REQUIRE(rows.size() == 1 + 13);  // 16 .. 65536
  CHECK(rows.back().rfind("65536,", 0) == 0);
}

TEST_CASE("limsup") {
  auto r = invoke({"limsup", "2", "--bits", "4096", "--json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["burn_in"] == 4);
  CHECK(j["subsequence"] == "geometric:16:2");
  auto listed = invoke({"limsup", "2", "--bits", "4096", "--burn-in", "1", "--subseq",
                        "explicit:16,64,256,512"});
  REQUIRE(listed.code == kExitOk);
  CHECK(lines(listed.out)[1].rfind("2,4096,\"explicit:16,64,256,512\",1,", 0) == 0);

  CHECK(invoke({"limsup", "2", "--bits", "64"}).code == kExitUsage);
  CHECK(invoke({"limsup", "2", "--subseq", "geometric:16:1"}).code == kExitUsage);
}

TEST_CASE("report") {
  auto r = invoke({"report", "--s", "2,3,5", "--bits", "1024"});
  REQUIRE(r.code == kExitOk);
  auto rows = lines(r.out);
  REQUIRE(rows.size() == 1 + 9);
  for (std::size_t i = 0; i < 9; ++i) {
    const char* expected = i < 3 ? "2," : i < 6 ? "3," : "5,";
    CHECK(rows[1 + i].rfind(expected, 0) == 0);
  }

  auto filtered = invoke({"report", "--s", "16,2", "--bits", "1024"});
  CHECK(filtered.code == kExitOk);
  CHECK(filtered.err.find("s = 16") != std::string::npos);
  CHECK(filtered.out.find("\n16,") == std::string::npos);

  auto big = invoke({"report", "--s", "2", "--bits", "65536"});
  CHECK(big.code == kExitOk);
  for (const auto& row : lines(big.out)) CHECK(row.find(",false,") == std::string::npos);
}

TEST_CASE("output is deterministic and --meta only adds a header") {
  std::vector<std::string> args{"verify", "--s", "2..20", "--bits", "1024"};
  auto first = invoke(args);
  auto second = invoke(args);
  CHECK(first.out == second.out);

  args.push_back("--meta");
  auto with_meta = invoke(args);
  auto meta_lines = lines(with_meta.out);
  REQUIRE(!meta_lines.empty());
  CHECK(meta_lines[0].rfind("# sqnormal", 0) == 0);
  CHECK(with_meta.out.substr(meta_lines[0].size() + 1) == first.out);

  auto json = invoke({"digits", "2", "8", "--json", "--meta"});
  auto j = nlohmann::json::parse(json.out);
  CHECK(j.contains("meta"));
}

TEST_CASE("--out writes the report to a file") {
  auto path = temp_path("out.csv");
  auto r = invoke({"digits", "2", "8", "--csv", "--out", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  CHECK(slurp(path) == "s,n,digits\n2,8,1.01101010\n");
  std::filesystem::remove(path);
}

TEST_CASE("config file values yield to flags") {
  auto path = temp_path("config.cfg");
  {
    std::ofstream cfg(path);
    cfg << "# defaults\nbits=64\njson=true\nl=3\n";
  }
  auto from_config = nlohmann::json::parse(
      invoke({"construct", "2", "--config", path.string()}).out);
  CHECK(from_config["n"] == 64);
  CHECK(from_config["l"] == 3);

  auto overridden = nlohmann::json::parse(
      invoke({"construct", "2", "--config", path.string(), "--l", "2"}).out);
  CHECK(overridden["l"] == 2);
  CHECK(overridden["n"] == 64);

  CHECK(invoke({"construct", "2", "--config", "/nonexistent/x.cfg"}).code == kExitUsage);
  std::filesystem::remove(path);
}

TEST_CASE("parse_s_values") {
  SValues v = parse_s_values("2..10,7");
  CHECK(v.accepted == std::vector<std::uint64_t>{2, 3, 5, 6, 7, 8, 10, 7});
  CHECK(v.perfect_squares == std::vector<std::uint64_t>{4, 9});
  CHECK_THROWS_AS(parse_s_values(""), PreconditionError);
  CHECK_THROWS_AS(parse_s_values("3..x"), PreconditionError);
}

TEST_CASE("format helpers") {
  CHECK(format_exact(mpq_class(1, 2)) == "1/2");
  CHECK(format_exact(mpq_class(1)) == "1/1");
  CHECK(format_decimal(mpq_class(1, 3)) == "0.333333333333333");
  CHECK(format_decimal(mpq_class(1, 2)) == "0.5");
}

TEST_CASE("shipped binary matches the in-process runner") {
  const std::string cmd = std::string(SQNORMAL_BINARY) + " digits 2 8";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string captured;
  char buffer[256];
  while (std::fgets(buffer, sizeof buffer, pipe)) captured += buffer;
  int status = pclose(pipe);
  CHECK(status == 0);
  CHECK(captured == invoke({"digits", "2", "8"}).out);

  const std::string bad = std::string(SQNORMAL_BINARY) + " digits 4 8 2>/dev/null";
  int bad_status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(bad_status) == kExitUsage);
}
