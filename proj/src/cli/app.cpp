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

#include "sqnormal/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqnormal/cli/format.hpp"
#include "sqnormal/cli/suite.hpp"
#include "sqnormal/constructions.hpp"
#include "sqnormal/errors.hpp"
#include "sqnormal/exact_core.hpp"
#include "sqnormal/statistics.hpp"

namespace sqnormal::cli {

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr std::size_t kDefaultPrecision = 4096;

using ordered_json = nlohmann::ordered_json;

enum class Format { kText, kCsv, kJson };

struct Options {
  std::uint64_t s = 0;
  std::optional<std::size_t> n;  // positional count for digits
  std::optional<std::size_t> bits;
  std::optional<std::size_t> l;
  std::string s_values;
  bool json = false;
  bool csv = false;
  bool meta = false;
  bool seed_free = false;
  std::string out_path;
  std::string config_path;
  std::optional<std::string> checkpoints;
  std::string plot_path;
  std::string subsequence = "geometric:16:2";
  std::size_t burn_in = 4;
  std::optional<std::size_t> min_length;
  std::vector<std::string> flips;
};

struct Cli {
  CLI::App app{"Exact digits of sqrt(s) and of the tail constructions built "
               "from it, with digit-frequency statistics.", "sqnormal"};
  Options opts;
  CLI::App* digits = nullptr;
  CLI::App* construct = nullptr;
  CLI::App* verify = nullptr;
  CLI::App* freq = nullptr;
  CLI::App* limsup = nullptr;
  CLI::App* report = nullptr;
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--bits", o.bits, "Fractional digits of precision (default 4096)");
  sub->add_flag("--json", o.json, "JSON output");
  sub->add_flag("--csv", o.csv, "CSV output");
  sub->add_option("--out", o.out_path, "Write data output to this path");
  sub->add_flag("--meta", o.meta, "Prepend a provenance header");
  sub->add_flag("--seed-free", o.seed_free,
                "Accepted for compatibility; every command is deterministic");
  sub->add_option("--config", o.config_path, "key=value file mirroring flags");
}

std::unique_ptr<Cli> make_cli() {
  auto cli = std::make_unique<Cli>();
  Options& o = cli->opts;
  CLI::App& app = cli->app;
  app.require_subcommand(1);

  cli->digits = app.add_subcommand("digits", "Exact binary digits of sqrt(s)");
  cli->digits->add_option("s", o.s, "Radicand (not a perfect square)")->required();
  cli->digits->add_option("n", o.n, "Fractional digit count");
  add_common(cli->digits, o);

  cli->construct = app.add_subcommand("construct", "Build omega1, omega2, nu1, nu2");
  cli->construct->add_option("s", o.s, "Radicand (not a perfect square)")->required();
  cli->construct->add_option("--l", o.l, "Shift l with 2^l > s (default: smallest)");
  add_common(cli->construct, o);

  cli->verify = app.add_subcommand("verify", "Run the exact tail and identity suite");
  cli->verify->add_option("--s", o.s_values, "s values: 2..50, 2,3,5")->required();
  cli->verify->add_option("--l", o.l, "Shift l for every s");
  cli->verify->add_option("--min-length", o.min_length,
                          "Minimum verified tail length (default bits/2)");
  cli->verify->add_option("--flip", o.flips,
                          "Fault injection: flip digit, e.g. nu2:37");
  add_common(cli->verify, o);

  cli->freq = app.add_subcommand("freq", "Frequency curve f_n of sqrt(s) digits");
  cli->freq->add_option("s", o.s, "Radicand (not a perfect square)")->required();
  cli->freq->add_option("--checkpoints", o.checkpoints,
                        "Comma-separated ascending n (default powers of 2)");
  cli->freq->add_option("--plot", o.plot_path, "Write an SVG chart here");
  add_common(cli->freq, o);

  cli->limsup = app.add_subcommand("limsup", "sup/inf of f_{n_k} past burn-in");
  cli->limsup->add_option("s", o.s, "Radicand (not a perfect square)")->required();
  cli->limsup->add_option("--subseq", o.subsequence,
                          "arithmetic:A:D, geometric:A:R or explicit:N1,N2,...");
  cli->limsup->add_option("--burn-in", o.burn_in, "Initial indices to skip");
  add_common(cli->limsup, o);

  cli->report = app.add_subcommand("report", "Finite frequency relation table");
  cli->report->add_option("--s", o.s_values, "s values: 2..50, 2,3,5")->required();
  cli->report->add_option("--l", o.l, "Shift l for every s");
  cli->report->add_option("--subseq", o.subsequence,
                          "arithmetic:A:D, geometric:A:R or explicit:N1,N2,...");
  cli->report->add_option("--burn-in", o.burn_in, "Initial indices to skip");
  add_common(cli->report, o);
  return cli;
}

std::string trim(std::string_view text) {
  auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  auto end = text.find_last_not_of(" \t\r");
  return std::string(text.substr(begin, end - begin + 1));
}

// Appends "--key value" for config entries the command line did not set.
std::vector<std::string> merge_config(const Cli& cli,
                                      std::vector<std::string> args) {
  std::ifstream in(cli.opts.config_path);
  if (!in) {
    throw PreconditionError("cannot read config file '" + cli.opts.config_path + "'");
  }
  CLI::App* sub = cli.app.get_subcommands().front();
  std::string line;
  while (std::getline(in, line)) {
    std::string entry = trim(line);
    if (entry.empty() || entry[0] == '#') continue;
    auto eq = entry.find('=');
    if (eq == std::string::npos) {
      throw PreconditionError("config line without '=': " + entry);
    }
    std::string key = trim(std::string_view(entry).substr(0, eq));
    std::string value = trim(std::string_view(entry).substr(eq + 1));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    const CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr || opt->count() > 0 || key == "config") continue;
    if (opt->get_expected_min() == 0) {
      if (value == "true" || value == "1" || value == "yes") args.push_back("--" + key);
    } else {
      args.push_back("--" + key);
      args.push_back(value);
    }
  }
  return args;
}

void parse(Cli& cli, std::vector<std::string> args) {
  std::reverse(args.begin(), args.end());
  cli.app.parse(args);
}

Format output_format(const Options& o, Format fallback) {
  if (o.json && o.csv) throw PreconditionError("--json and --csv are exclusive");
  if (o.json) return Format::kJson;
  if (o.csv) return Format::kCsv;
  return fallback;
}

std::string meta_line(const std::vector<std::string>& args) {
  std::string line = "sqnormal " + std::string(kVersion);
  for (const auto& a : args) line += " " + a;
  return line;
}

std::string dump(ordered_json j, const Options& o,
                 const std::vector<std::string>& args) {
  if (o.meta) {
    ordered_json wrapped;
    wrapped["meta"] = meta_line(args);
    for (auto& [k, v] : j.items()) wrapped[k] = v;
    j = std::move(wrapped);
  }
  return j.dump(2) + "\n";
}

std::string csv_header(const Options& o, const std::vector<std::string>& args) {
  return o.meta ? "# " + meta_line(args) + "\n" : std::string();
}

// RFC 4180 quoting for fields that may carry commas.
std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// Runs fn over items on a bounded pool; results keep input order.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, Fn fn) {
  using R = std::invoke_result_t<Fn, const T&>;
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  std::vector<R> results;
  results.reserve(items.size());
  for (std::size_t begin = 0; begin < items.size(); begin += width) {
    std::vector<std::future<R>> batch;
    const std::size_t end = std::min(items.size(), begin + width);
    for (std::size_t i = begin; i < end; ++i) {
      batch.push_back(std::async(std::launch::async, fn, std::cref(items[i])));
    }
    for (auto& f : batch) results.push_back(f.get());
  }
  return results;
}

std::vector<std::uint64_t> accepted_s(const Options& o, std::ostream& err) {
  SValues values = parse_s_values(o.s_values);
  for (std::uint64_t s : values.perfect_squares) {
    err << "warning: skipping s = " << s
        << " (perfect square; the hypothesis requires a non-square)\n";
  }
  if (values.accepted.empty()) {
    throw PreconditionError("no non-square s values selected");
  }
  return values.accepted;
}

std::size_t precision(const Options& o) { return o.bits.value_or(kDefaultPrecision); }

std::size_t resolve_l(const Options& o, std::uint64_t s, std::size_t bits) {
  std::size_t l = o.l.value_or(default_l(s));
  if (bits < min_precision(l)) {
    throw PreconditionError("precision " + std::to_string(bits) +
                            " too small for s = " + std::to_string(s) + ", l = " +
                            std::to_string(l) + " (need at least 8l = " +
                            std::to_string(min_precision(l)) + ")");
  }
  return l;
}

ConstructionSet apply_flips(ConstructionSet cs, const std::vector<std::string>& flips) {
  for (const auto& flip : flips) {
    auto colon = flip.find(':');
    if (colon == std::string::npos) {
      throw PreconditionError("--flip expects target:position, got '" + flip + "'");
    }
    std::string target = flip.substr(0, colon);
    std::size_t pos = 0;
    try {
      pos = std::stoul(flip.substr(colon + 1));
    } catch (const std::logic_error&) {
      throw PreconditionError("bad --flip position in '" + flip + "'");
    }
    BitSequence* seq = target == "omega1" ? &cs.omega1
                       : target == "omega2" ? &cs.omega2
                       : target == "nu1"    ? &cs.nu1
                       : target == "nu2"    ? &cs.nu2
                                            : nullptr;
    if (seq == nullptr) throw PreconditionError("unknown --flip target '" + target + "'");
    *seq = seq->with_flipped(pos);
  }
  return cs;
}

std::string cmd_digits(const Options& o, const std::vector<std::string>& args) {
  const std::size_t n = o.n ? *o.n : precision(o);
  BitSequence digits = sqrt_bits(mpz_class(o.s), n);
  switch (output_format(o, Format::kText)) {
    case Format::kJson:
      return dump(ordered_json{{"s", std::to_string(o.s)},
                               {"n", n},
                               {"digits", digits.to_string()}},
                  o, args);
    case Format::kCsv:
      return csv_header(o, args) + "s,n,digits\n" + std::to_string(o.s) + "," +
             std::to_string(n) + "," + digits.to_string() + "\n";
    case Format::kText:
      break;
  }
  return digits.to_string() + "\n";
}

std::string cmd_construct(const Options& o, const std::vector<std::string>& args) {
  const std::size_t bits = precision(o);
  ConstructionSet cs = build_construction(o.s, o.l, bits);
  ordered_json j = construction_to_json(cs);
  if (output_format(o, Format::kCsv) == Format::kJson) return dump(j, o, args);
  std::string out = csv_header(o, args) + "field,value\n";
  for (const char* key : {"s", "l", "n", "omega1", "omega2", "nu1", "nu2"}) {
    const auto& v = j[key];
    out += std::string(key) + "," +
           (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  }
  out += "rational1," + cs.rational1.to_string() + "\n";
  out += "rational2," + cs.rational2.to_string() + "\n";
  return out;
}

ordered_json match_json(const TailMatch& m) {
  ordered_json j{{"offset_a", m.offset_a},
                 {"offset_b", m.offset_b},
                 {"relation", std::string(to_string(m.relation))},
                 {"verified_length", m.verified_length}};
  if (m.alignment_index) j["alignment_index"] = *m.alignment_index;
  return j;
}

int cmd_verify(const Options& o, const std::vector<std::string>& args,
               std::string& output, std::ostream& err) {
  const std::size_t bits = precision(o);
  const auto svals = accepted_s(o, err);
  std::vector<std::pair<std::uint64_t, std::size_t>> jobs;
  for (std::uint64_t s : svals) jobs.emplace_back(s, resolve_l(o, s, bits));
  const std::size_t min_length = o.min_length.value_or(default_min_length(bits));

  auto results = parallel_map(jobs, [&](const std::pair<std::uint64_t, std::size_t>& job) {
    ConstructionSet cs =
        apply_flips(build_construction(job.first, job.second, bits), o.flips);
    return run_suite(cs, min_length);
  });

  const bool all_passed = std::all_of(results.begin(), results.end(),
                                      [](const SuiteResult& r) { return r.passed; });
  if (output_format(o, Format::kCsv) == Format::kJson) {
    ordered_json list = ordered_json::array();
    for (const auto& r : results) {
      ordered_json j{{"s", std::to_string(r.s)}, {"l", r.l}, {"n", r.precision},
                     {"passed", r.passed}};
      if (r.passed) {
        j["nu_tail"] = match_json(r.nu_equal);
        j["omega1_complement"] = match_json(r.omega1);
        j["omega2_shift"] = match_json(r.omega2);
        j["alignment"] = {{"position", r.alignment.common_position},
                          {"r", r.alignment.common_r},
                          {"shift", r.alignment.shift}};
        j["nu_difference"] = r.identities.difference.to_string();
      } else {
        j["failure"] = r.failure;
        j["failure_position"] = r.failure_position;
      }
      list.push_back(std::move(j));
    }
    output = dump(ordered_json{{"command", "verify"},
                               {"n", bits},
                               {"min_length", min_length},
                               {"all_passed", all_passed},
                               {"results", std::move(list)}},
                  o, args);
  } else {
    std::ostringstream csv;
    csv << csv_header(o, args)
        << "s,l,n,nu_offset,alignment_r,nu_verified,omega1_offset,"
           "omega1_verified,omega2_offset,omega2_verified,nu_difference,status\n";
    for (const auto& r : results) {
      csv << r.s << ',' << r.l << ',' << r.precision << ',';
      if (r.passed) {
        csv << r.nu_equal.offset_a << ',' << r.alignment.common_r << ','
            << r.nu_equal.verified_length << ',' << r.omega1.offset_a << ','
            << r.omega1.verified_length << ',' << r.omega2.offset_a << ','
            << r.omega2.verified_length << ','
            << r.identities.difference.to_string() << ",pass\n";
      } else {
        csv << ",,,,,,," << ",fail at position " << r.failure_position << "\n";
      }
    }
    output = csv.str();
  }

  for (const auto& r : results) {
    if (!r.passed) {
      err << "verification failed: s = " << r.s << ", l = " << r.l
          << ", position = " << r.failure_position << ": " << r.failure << "\n";
      return kExitVerificationFailure;
    }
  }
  return kExitOk;
}

std::vector<std::uint64_t> parse_checkpoints(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw PreconditionError("bad checkpoint '" + item + "'");
    }
  }
  if (out.empty()) throw PreconditionError("empty checkpoint list");
  return out;
}

std::string cmd_freq(const Options& o, const std::vector<std::string>& args) {
  const std::size_t bits = precision(o);
  const auto checkpoints =
      o.checkpoints ? parse_checkpoints(*o.checkpoints) : default_checkpoints(bits);
  const BitSequence digits = sqrt_bits(mpz_class(o.s), bits);
  const FrequencyCurve curve = frequency_curve(digits, checkpoints);

  if (!o.plot_path.empty()) {
    std::ofstream plot(o.plot_path, std::ios::binary);
    if (!plot) throw PreconditionError("cannot write plot to '" + o.plot_path + "'");
    plot << frequency_svg(curve, "f_n for sqrt(" + std::to_string(o.s) + ")");
  }

  if (output_format(o, Format::kCsv) == Format::kJson) {
    ordered_json rows = ordered_json::array();
    for (const auto& c : curve.checkpoints) {
      rows.push_back({{"n", c.n}, {"ones", c.ones}, {"f_n", format_decimal(c.f)},
                      {"f_exact", format_exact(c.f)}});
    }
    return dump(ordered_json{{"s", std::to_string(o.s)},
                             {"bits", bits},
                             {"checkpoints", std::move(rows)}},
                o, args);
  }
  std::string out = csv_header(o, args) + "n,ones,f_n,f_exact\n";
  for (const auto& c : curve.checkpoints) {
    out += std::to_string(c.n) + "," + std::to_string(c.ones) + "," +
           format_decimal(c.f) + "," + format_exact(c.f) + "\n";
  }
  return out;
}

std::string cmd_limsup(const Options& o, const std::vector<std::string>& args) {
  const std::size_t bits = precision(o);
  const SubsequenceSpec spec = SubsequenceSpec::parse(o.subsequence);
  const BitSequence digits = sqrt_bits(mpz_class(o.s), bits);
  const LimsupEstimate est = limsup_estimate(digits, spec, o.burn_in);

  if (output_format(o, Format::kCsv) == Format::kJson) {
    ordered_json values = ordered_json::array();
    for (std::size_t i = 0; i < est.values.size(); ++i) {
      const auto& c = est.values[i];
      values.push_back({{"k", est.first_k + i}, {"n", c.n}, {"ones", c.ones},
                        {"f_exact", format_exact(c.f)}});
    }
    return dump(ordered_json{{"s", std::to_string(o.s)},
                             {"bits", bits},
                             {"subsequence", spec.to_string()},
                             {"burn_in", est.burn_in},
                             {"first_k", est.first_k},
                             {"last_k", est.last_k},
                             {"sup_observed", format_exact(est.sup_observed)},
                             {"inf_observed", format_exact(est.inf_observed)},
                             {"values", std::move(values)}},
                o, args);
  }
  return csv_header(o, args) +
         "s,bits,subsequence,burn_in,first_k,last_k,sup_observed,inf_observed,"
         "sup_exact,inf_exact\n" +
         std::to_string(o.s) + "," + std::to_string(bits) + "," + csv_field(spec.to_string()) +
         "," + std::to_string(est.burn_in) + "," + std::to_string(est.first_k) + "," +
         std::to_string(est.last_k) + "," + format_decimal(est.sup_observed) + "," +
         format_decimal(est.inf_observed) + "," + format_exact(est.sup_observed) +
         "," + format_exact(est.inf_observed) + "\n";
}

int cmd_report(const Options& o, const std::vector<std::string>& args,
               std::string& output, std::ostream& err) {
  const std::size_t bits = precision(o);
  const SubsequenceSpec spec = SubsequenceSpec::parse(o.subsequence);
  const auto svals = accepted_s(o, err);
  std::vector<std::pair<std::uint64_t, std::size_t>> jobs;
  for (std::uint64_t s : svals) jobs.emplace_back(s, resolve_l(o, s, bits));

  auto reports = parallel_map(jobs, [&](const std::pair<std::uint64_t, std::size_t>& job) {
    return paper_relation_report(build_construction(job.first, job.second, bits),
                                 spec, o.burn_in);
  });

  auto opt_exact = [](const std::optional<mpq_class>& v) {
    return v ? format_exact(*v) : std::string();
  };
  if (output_format(o, Format::kCsv) == Format::kJson) {
    ordered_json blocks = ordered_json::array();
    for (const auto& rep : reports) {
      ordered_json rows = ordered_json::array();
      for (const auto& r : rep.rows) {
        ordered_json row{{"k", r.k},
                         {"n", r.n},
                         {"f_omega1", format_exact(r.f_omega1)},
                         {"f_omega2", format_exact(r.f_omega2)}};
        row["h_nu1"] = r.h_nu1 ? ordered_json(format_exact(*r.h_nu1)) : ordered_json();
        row["h_nu2"] = r.h_nu2 ? ordered_json(format_exact(*r.h_nu2)) : ordered_json();
        row["sum"] = format_exact(r.sum);
        row["deviation"] = format_exact(r.deviation);
        row["bound"] = format_exact(r.bound);
        row["within_bound"] = r.within_bound;
        row["omega1_distance"] = format_exact(r.omega1_distance);
        row["omega2_distance"] = format_exact(r.omega2_distance);
        rows.push_back(std::move(row));
      }
      blocks.push_back({{"s", std::to_string(rep.s)},
                        {"l", rep.l},
                        {"n", rep.precision},
                        {"subsequence", rep.subsequence},
                        {"burn_in", rep.burn_in},
                        {"omega1_prefix", rep.omega1_prefix},
                        {"omega2_prefix", rep.omega2_prefix},
                        {"note", "finite-n values only; limits are not computed"},
                        {"rows", std::move(rows)}});
    }
    output = dump(ordered_json{{"command", "report"}, {"blocks", std::move(blocks)}},
                  o, args);
  } else {
    std::string csv = csv_header(o, args) +
                      "s,l,k,n,f_omega1,f_omega2,h_nu1,h_nu2,sum,deviation,bound,"
                      "within_bound,omega1_distance,omega2_distance\n";
    for (const auto& rep : reports) {
      for (const auto& r : rep.rows) {
        csv += std::to_string(rep.s) + "," + std::to_string(rep.l) + "," +
               std::to_string(r.k) + "," + std::to_string(r.n) + "," +
               format_exact(r.f_omega1) + "," + format_exact(r.f_omega2) + "," +
               opt_exact(r.h_nu1) + "," + opt_exact(r.h_nu2) + "," +
               format_exact(r.sum) + "," + format_exact(r.deviation) + "," +
               format_exact(r.bound) + "," + (r.within_bound ? "true" : "false") +
               "," + format_decimal(r.omega1_distance) + "," +
               format_decimal(r.omega2_distance) + "\n";
      }
    }
    output = std::move(csv);
  }

  for (const auto& rep : reports) {
    for (const auto& r : rep.rows) {
      if (!r.within_bound) {
        err << "bound violated: s = " << rep.s << ", n = " << r.n << ": |sum - 1| = "
            << format_exact(r.deviation) << " > " << format_exact(r.bound) << "\n";
        return kExitVerificationFailure;
      }
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  auto cli = make_cli();
  std::vector<std::string> effective = args;
  try {
    parse(*cli, effective);
    if (!cli->opts.config_path.empty()) {
      effective = merge_config(*cli, args);
      cli = make_cli();
      parse(*cli, effective);
    }
  } catch (const CLI::CallForHelp& e) {
    out << cli->app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << cli->app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const Options& o = cli->opts;
  CLI::App* sub = cli->app.get_subcommands().front();
  std::string output;
  int code = kExitOk;
  try {
    if (sub == cli->digits) {
      output = cmd_digits(o, args);
    } else if (sub == cli->construct) {
      output = cmd_construct(o, args);
    } else if (sub == cli->verify) {
      code = cmd_verify(o, args, output, err);
    } else if (sub == cli->freq) {
      output = cmd_freq(o, args);
    } else if (sub == cli->limsup) {
      output = cmd_limsup(o, args);
    } else if (sub == cli->report) {
      code = cmd_report(o, args, output, err);
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const VerificationError& e) {
    err << "verification failed at position " << e.position() << ": " << e.what()
        << "\n";
    return kExitVerificationFailure;
  }

  if (o.out_path.empty()) {
    out << output;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return kExitUsage;
    }
    file << output;
  }
  return code;
}

}  // namespace sqnormal::cli
