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

#include "sqnormal/cli/format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "sqnormal/errors.hpp"
#include "sqnormal/exact_core.hpp"

namespace sqnormal::cli {

std::string format_decimal(const mpq_class& value) {
  mpf_class f(0, 512);
  f = value;
  char buf[64];
  gmp_snprintf(buf, sizeof buf, "%.15Fg", f.get_mpf_t());
  return buf;
}

std::string format_exact(const mpq_class& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

nlohmann::ordered_json construction_to_json(const ConstructionSet& cs) {
  nlohmann::ordered_json j;
  j["s"] = std::to_string(cs.s);
  j["l"] = cs.l;
  j["n"] = cs.precision;
  j["omega1"] = cs.omega1.to_string();
  j["omega2"] = cs.omega2.to_string();
  j["nu1"] = cs.nu1.to_string();
  j["nu2"] = cs.nu2.to_string();
  j["rational_terms"] = {{"nu1", cs.rational1.to_string()},
                         {"nu2", cs.rational2.to_string()}};
  return j;
}

ConstructionSet construction_from_json(const nlohmann::json& j) {
  try {
    ConstructionSet cs;
    cs.s = std::stoull(j.at("s").get<std::string>());
    cs.l = j.at("l").get<std::size_t>();
    cs.precision = j.at("n").get<std::size_t>();
    cs.omega1 = BitSequence::parse(j.at("omega1").get<std::string>(), "omega1");
    cs.omega2 = BitSequence::parse(j.at("omega2").get<std::string>(), "omega2");
    cs.nu1 = BitSequence::parse(j.at("nu1").get<std::string>(), "nu1");
    cs.nu2 = BitSequence::parse(j.at("nu2").get<std::string>(), "nu2");
    const auto& terms = j.at("rational_terms");
    cs.rational1 = DyadicRational::parse(terms.at("nu1").get<std::string>());
    cs.rational2 = DyadicRational::parse(terms.at("nu2").get<std::string>());
    if (cs.rational1 != rational_term1(cs.s, cs.l) ||
        cs.rational2 != rational_term2(cs.s, cs.l)) {
      throw PreconditionError("rational terms do not match s and l");
    }
    return cs;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed construction JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    throw PreconditionError(std::string("malformed construction JSON: ") + e.what());
  }
}

namespace {

std::uint64_t parse_natural(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw PreconditionError("cannot parse s value '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

SValues parse_s_values(std::string_view text) {
  SValues out;
  auto add = [&](std::uint64_t s) {
    if (s < 2 || is_perfect_square(mpz_class(s))) {
      out.perfect_squares.push_back(s);
    } else {
      out.accepted.push_back(s);
    }
  };
  std::size_t begin = 0;
  while (begin <= text.size()) {
    auto end = text.find(',', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(begin, end - begin);
    if (auto dots = item.find(".."); dots != std::string_view::npos) {
      std::uint64_t lo = parse_natural(item.substr(0, dots));
      std::uint64_t hi = parse_natural(item.substr(dots + 2));
      if (lo > hi) throw PreconditionError("empty range '" + std::string(item) + "'");
      for (std::uint64_t s = lo; s <= hi; ++s) add(s);
    } else {
      add(parse_natural(item));
    }
    begin = end + 1;
  }
  return out;
}

std::string frequency_svg(const FrequencyCurve& curve, std::string_view title) {
  constexpr double kWidth = 640, kHeight = 400, kMargin = 50;
  const auto& pts = curve.checkpoints;
  double x_min = 0, x_max = 1;
  if (!pts.empty()) {
    x_min = std::log2(static_cast<double>(pts.front().n));
    x_max = std::log2(static_cast<double>(pts.back().n));
    if (x_max <= x_min) x_max = x_min + 1;
  }
  auto px = [&](double x) {
    return kMargin + (x - x_min) / (x_max - x_min) * (kWidth - 2 * kMargin);
  };
  auto py = [&](double y) { return kHeight - kMargin - y * (kHeight - 2 * kMargin); };

  std::ostringstream svg;
  svg.setf(std::ios::fixed);
  svg.precision(2);
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  svg << "<title>";
  for (char ch : title) {
    switch (ch) {
      case '<': svg << "&lt;"; break;
      case '>': svg << "&gt;"; break;
      case '&': svg << "&amp;"; break;
      default: svg << ch;
    }
  }
  svg << "</title>\n";
  svg << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" fill=\"white\"/>\n";
  // axes
  svg << "<line x1=\"" << kMargin << "\" y1=\"" << py(0) << "\" x2=\""
      << kWidth - kMargin << "\" y2=\"" << py(0) << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kMargin << "\" y1=\"" << py(0) << "\" x2=\"" << kMargin
      << "\" y2=\"" << py(1) << "\" stroke=\"black\"/>\n";
  svg << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 10
      << "\" text-anchor=\"middle\" font-size=\"12\">log2 n</text>\n";
  svg << "<text x=\"12\" y=\"" << kHeight / 2
      << "\" font-size=\"12\">f_n</text>\n";
  for (double y : {0.0, 0.5, 1.0}) {
    svg << "<text x=\"" << kMargin - 6 << "\" y=\"" << py(y) + 4
        << "\" text-anchor=\"end\" font-size=\"10\">" << y << "</text>\n";
  }
  // reference at 1/2
  svg << "<line x1=\"" << kMargin << "\" y1=\"" << py(0.5) << "\" x2=\""
      << kWidth - kMargin << "\" y2=\"" << py(0.5)
      << "\" stroke=\"gray\" stroke-dasharray=\"4 4\"/>\n";
  svg << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) svg << ' ';
    svg << px(std::log2(static_cast<double>(pts[i].n))) << ','
        << py(pts[i].f.get_d());
  }
  svg << "\"/>\n</svg>\n";
  return svg.str();
}

}  // namespace sqnormal::cli
