// Copyright 2026 The fracdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fracdim/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <new>
#include <ostream>
#include <sstream>

#include "fracdim/boxcount.hpp"
#include "fracdim/constructions.hpp"
#include "fracdim/errors.hpp"
#include "fracdim/expansions.hpp"

namespace fracdim {

namespace {

using Json = nlohmann::ordered_json;

// Validator that reports the parser's own message on failure.
template <typename Parse>
CLI::Validator parses_as(std::string name, Parse parse) {
  return CLI::Validator(
      [parse](std::string& text) -> std::string {
        try {
          parse(text);
          return {};
        } catch (const std::exception& e) {
          return e.what();
        }
      },
      std::move(name));
}

std::pair<std::string, std::string> split_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw DomainError("expected A..B, got '" + text + "'");
  }
  return {text.substr(0, dots), text.substr(dots + 2)};
}

unsigned parse_unsigned(const std::string& text) {
  unsigned v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw DomainError("not a nonnegative integer: '" + text + "'");
  }
  return v;
}

std::pair<unsigned, unsigned> parse_ladder(const std::string& text) {
  const auto [a, b] = split_range(text);
  const unsigned lo = parse_unsigned(a), hi = parse_unsigned(b);
  if (lo >= hi) throw DomainError("ladder needs J1 < J2, got " + text);
  return {lo, hi};
}

Interval parse_domain(const std::string& text) {
  const auto [a, b] = split_range(text);
  Rational lo = Rational::parse(a), hi = Rational::parse(b);
  if (lo >= hi) throw DomainError("domain needs lo < hi, got " + text);
  return Interval::closed(std::move(lo), std::move(hi));
}

WordKind parse_kind(const std::string& text) {
  if (text == "cf") return WordKind::kContinuedFraction;
  if (text == "egy") return WordKind::kEgyptian;
  if (text == "engel") return WordKind::kEngel;
  throw UsageError("--kind: expected cf, egy or engel, got '" + text + "'");
}

unsigned threads_from_env() {
  const char* value = std::getenv("FRACDIM_THREADS");
  if (value == nullptr || *value == '\0') return 0;
  try {
    return parse_unsigned(value);
  } catch (const DomainError& e) {
    throw UsageError(std::string("FRACDIM_THREADS: ") + e.what());
  }
}

Json digits_json(const Word& w) {
  Json out = Json::array();
  for (const auto& d : w.digits()) {
    if (fits_u64(d)) {
      out.push_back(to_u64(d));
    } else {
      out.push_back(d.get_str());
    }
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string csv_row_prefix(const SetDescriptor& set) {
  return std::string(set.name()) + "," + std::to_string(set.m()) + "," +
         set.alpha().to_string();
}

constexpr std::string_view kCsvHeader = "set,m,alpha,scale_log2,cells";

int run_expand(const RunConfig& cfg, std::ostream& out) {
  const Expansion e = expand(cfg.kind, cfg.x);
  switch (cfg.format) {
    case Format::kJson: {
      Json j;
      j["kind"] = to_string(cfg.kind);
      j["x"] = cfg.x.to_string();
      j["digits"] = digits_json(e.word);
      j["length"] = e.length;
      out << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << "kind,x,digits,length,value\n"
          << to_string(cfg.kind) << ',' << cfg.x << ',' << csv_quote(e.word.to_string())
          << ',' << e.length << ',' << e.value << '\n';
      break;
    case Format::kText:
      out << e.word << " length=" << e.length << " value=" << e.value << '\n';
      break;
  }
  return kExitOk;
}

int run_approx(const RunConfig& cfg, std::ostream& out) {
  const bool egy = cfg.kind == WordKind::kEgyptian;
  if (!egy && cfg.kind != WordKind::kEngel) {
    throw UsageError("--kind: approx supports egy and engel");
  }
  const Approximation a = egy ? egy_approximate(cfg.x, cfg.n, cfg.m)
                              : engel_approximate(cfg.x, cfg.n, cfg.m);
  const BigInt big_n(cfg.n);
  const Rational bound(BigInt(1), egy ? pow(big_n, 1UL << cfg.m) : pow(big_n, cfg.m + 1UL));
  const Rational error = (cfg.x - a.value).abs();
  const Word re = expand(cfg.kind, a.value).word;
  const bool pass = error <= bound && re == a.word && re.size() == cfg.m;
  switch (cfg.format) {
    case Format::kJson: {
      Json j;
      j["kind"] = to_string(cfg.kind);
      j["x"] = cfg.x.to_string();
      j["n"] = cfg.n;
      j["m"] = cfg.m;
      j["digits"] = digits_json(a.word);
      j["y"] = a.value.to_string();
      j["error"] = error.to_string();
      j["bound"] = bound.to_string();
      j["pass"] = pass;
      out << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << "kind,x,n,m,word,y,error,bound,pass\n"
          << to_string(cfg.kind) << ',' << cfg.x << ',' << cfg.n << ',' << cfg.m << ','
          << csv_quote(a.word.to_string()) << ',' << a.value << ',' << error << ','
          << bound << ',' << (pass ? "pass" : "fail") << '\n';
      break;
    case Format::kText:
      out << "word  " << a.word << "\ny     " << a.value << "\n|x-y| " << error
          << "\nbound " << bound << '\n'
          << (pass ? "pass" : "FAIL") << '\n';
      break;
  }
  return pass ? kExitOk : kExitFailure;
}

int run_mesh(const RunConfig& cfg, std::ostream& out) {
  const SetDescriptor& set = *cfg.set;
  const Grid grid = Grid::dyadic(cfg.scale_log2, cfg.domain.value_or(set.default_domain()));
  const MeshReport r = mesh_count(set, grid, MeshOptions{cfg.threads});
  switch (cfg.format) {
    case Format::kJson: {
      Json j;
      j["set"] = set.to_string();
      j["m"] = set.m();
      j["alpha"] = set.alpha().to_string();
      j["domain"] = grid.domain().to_string();
      j["scale_log2"] = cfg.scale_log2;
      j["cells"] = r.occupied_cells;
      out << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << kCsvHeader << '\n'
          << csv_row_prefix(set) << ',' << cfg.scale_log2 << ',' << r.occupied_cells << '\n';
      break;
    case Format::kText:
      out << set.to_string() << " domain " << grid.domain() << " r=2^-" << cfg.scale_log2
          << " cells=" << r.occupied_cells << '\n';
      break;
  }
  return kExitOk;
}

void write_dim_csv(const SetDescriptor& set, const SlopeFit& fit, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (std::size_t i = 0; i < fit.counts.size(); ++i) {
    out << csv_row_prefix(set) << ',' << fit.scale_log2[i] << ',' << fit.counts[i] << '\n';
  }
}

int run_dim(const RunConfig& cfg, std::ostream& out) {
  const SetDescriptor& set = *cfg.set;
  const SlopeFit fit = dim_estimate(set, cfg.j_lo, cfg.j_hi, MeshOptions{cfg.threads});
  if (cfg.csv_path) {
    std::ofstream file(*cfg.csv_path);
    if (!file) throw ResourceError("cannot open " + *cfg.csv_path + " for writing");
    write_dim_csv(set, fit, file);
  }
  switch (cfg.format) {
    case Format::kJson: {
      Json j;
      j["set"] = set.to_string();
      j["scales"] = fit.scale_log2;
      j["counts"] = fit.counts;
      j["slope"] = fit.slope;
      j["per_step_slopes"] = fit.per_step_slopes;
      j["residual"] = fit.residual;
      out << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      write_dim_csv(set, fit, out);
      break;
    case Format::kText: {
      out << set.to_string() << '\n' << std::fixed << std::setprecision(4);
      for (std::size_t i = 0; i < fit.counts.size(); ++i) {
        out << "  j=" << std::setw(2) << fit.scale_log2[i] << "  cells=" << std::setw(10)
            << fit.counts[i];
        if (i > 0) out << "  step=" << fit.per_step_slopes[i - 1];
        out << '\n';
      }
      out << "slope " << fit.slope << "  residual " << fit.residual << '\n';
      break;
    }
  }
  return kExitOk;
}

int run_cover(const RunConfig& cfg, std::ostream& out) {
  const auto cover = egf_cover(cfg.m, cfg.n);
  const auto write_csv = [&](std::ostream& os) {
    os << "word,lo,length\n";
    for (const auto& c : cover) {
      os << csv_quote(c.word.to_string()) << ',' << c.interval.lo() << ','
         << c.interval.length() << '\n';
    }
  };
  if (cfg.csv_path) {
    std::ofstream file(*cfg.csv_path);
    if (!file) throw ResourceError("cannot open " + *cfg.csv_path + " for writing");
    write_csv(file);
  }
  switch (cfg.format) {
    case Format::kJson: {
      Json rows = Json::array();
      for (const auto& c : cover) {
        rows.push_back({{"word", digits_json(c.word)},
                        {"lo", c.interval.lo().to_string()},
                        {"length", c.interval.length().to_string()}});
      }
      out << rows.dump() << '\n';
      break;
    }
    case Format::kCsv:
      if (!cfg.csv_path) write_csv(out);
      break;
    case Format::kText:
      for (const auto& c : cover) out << c.word << ' ' << c.interval << '\n';
      out << cover.size() << " intervals, total length "
          << measure_union([&] {
               std::vector<Interval> ivs;
               for (const auto& c : cover) ivs.push_back(c.interval);
               return ivs;
             }())
          << '\n';
      break;
  }
  return kExitOk;
}

int run_verify(const RunConfig& cfg, std::ostream& out) {
  SuiteOptions options;
  options.max_denom = cfg.max_denom;
  options.seed = cfg.seed;
  options.threads = cfg.threads;
  const auto results = run_suite(cfg.suite, options);
  const auto failed = std::count_if(results.begin(), results.end(),
                                    [](const CheckResult& r) { return !r.passed(); });
  switch (cfg.format) {
    case Format::kJson: {
      Json checks = Json::array();
      for (const auto& r : results) {
        checks.push_back({{"name", r.name},
                          {"cases", r.cases},
                          {"failures", r.failures},
                          {"passed", r.passed()},
                          {"detail", r.detail}});
      }
      Json j;
      j["suite"] = cfg.suite;
      j["seed"] = cfg.seed;
      j["passed"] = failed == 0;
      j["checks"] = std::move(checks);
      out << j.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << "check,cases,failures,status,detail\n";
      for (const auto& r : results) {
        out << csv_quote(r.name) << ',' << r.cases << ',' << r.failures << ','
            << (r.passed() ? "pass" : "FAIL") << ',' << csv_quote(r.detail) << '\n';
      }
      break;
    case Format::kText: {
      std::size_t width = 5;
      for (const auto& r : results) width = std::max(width, r.name.size());
      out << std::left << std::setw(static_cast<int>(width)) << "check" << "  "
          << std::right << std::setw(8) << "cases" << std::setw(10) << "failures"
          << "  status  detail\n";
      for (const auto& r : results) {
        out << std::left << std::setw(static_cast<int>(width)) << r.name << "  "
            << std::right << std::setw(8) << r.cases << std::setw(10) << r.failures
            << "  " << (r.passed() ? "pass  " : "FAIL  ") << "  " << r.detail << '\n';
      }
      out << "suite " << cfg.suite << ": " << results.size() << " checks, " << failed
          << " failed\n";
      break;
    }
  }
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"Exact rational expansions, covering constructions and box counting",
               "fracdim"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string kind, x, set, ladder, domain, format;
  bool json = false;

  const auto rational_check = parses_as("P/Q", [](const std::string& s) { Rational::parse(s); });
  const auto set_check = parses_as("SPEC", [](const std::string& s) { SetDescriptor::parse(s); });
  const auto ladder_check = parses_as("J1..J2", [](const std::string& s) { parse_ladder(s); });
  const auto domain_check = parses_as("LO..HI", [](const std::string& s) { parse_domain(s); });

  const auto common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "Write output to PATH instead of stdout");
    sub->add_flag("--json", json, "Emit JSON");
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* expand_cmd = app.add_subcommand("expand", "Expand a rational into a digit word");
  expand_cmd->add_option("--kind", kind, "cf, egy or engel")
      ->required()
      ->check(CLI::IsMember({"cf", "egy", "engel"}));
  expand_cmd->add_option("--x", x, "Rational P/Q")->required()->check(rational_check);
  common(expand_cmd);

  auto* approx_cmd = app.add_subcommand("approx", "Length-m approximation of x below 1/n");
  approx_cmd->add_option("--kind", kind, "egy or engel")
      ->required()
      ->check(CLI::IsMember({"egy", "engel"}));
  approx_cmd->add_option("--x", x, "Rational P/Q")->required()->check(rational_check);
  approx_cmd->add_option("--m", cfg.m, "Word length")->required()->check(CLI::Range(1u, 16u));
  approx_cmd->add_option("--n", cfg.n, "Scale parameter")->required()->check(CLI::PositiveNumber);
  common(approx_cmd);

  auto* mesh_cmd = app.add_subcommand("mesh", "Count grid cells meeting a set");
  mesh_cmd->add_option("--set", set, "Set SPEC")->required()->check(set_check);
  mesh_cmd->add_option("--log2-scale", cfg.scale_log2, "Cell width 2^-J")
      ->required()
      ->check(CLI::Range(0u, 40u));
  mesh_cmd->add_option("--domain", domain, "Grid domain LO..HI")->check(domain_check);
  common(mesh_cmd);

  auto* dim_cmd = app.add_subcommand("dim", "Box-counting slope over a scale ladder");
  dim_cmd->add_option("--set", set, "Set SPEC")->required()->check(set_check);
  dim_cmd->add_option("--log2-scales", ladder, "Ladder J1..J2")->required()->check(ladder_check);
  dim_cmd->add_option("--csv", cfg.csv_path, "Also write per-scale counts to PATH");
  common(dim_cmd);

  auto* cover_cmd = app.add_subcommand("cover-egf", "Explicit cover of the m-fold sumset");
  cover_cmd->add_option("--m", cfg.m, "Number of terms")->required()->check(CLI::Range(1u, 8u));
  cover_cmd->add_option("--n", cfg.n, "Scale parameter")->required()->check(CLI::Range(2ul, 1000000ul));
  cover_cmd->add_option("--csv", cfg.csv_path, "Write rows to PATH");
  common(cover_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::vector<std::string> suites(suite_names().begin(), suite_names().end());
  verify_cmd->add_option("--suite", cfg.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suites));
  verify_cmd->add_option("--max-denom", cfg.max_denom, "Denominator bound for enumeration suites")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000}));
  verify_cmd->add_option("--seed", cfg.seed, "Sampling seed");
  common(verify_cmd);

  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const auto* sub = app.get_subcommands().front();
  const std::string& name = sub->get_name();
  Format fallback = Format::kText;
  if (name == "expand") {
    cfg.command = Command::kExpand;
  } else if (name == "approx") {
    cfg.command = Command::kApprox;
  } else if (name == "mesh") {
    cfg.command = Command::kMesh;
    fallback = Format::kCsv;
  } else if (name == "dim") {
    cfg.command = Command::kDim;
    fallback = Format::kJson;
  } else if (name == "cover-egf") {
    cfg.command = Command::kCoverEgf;
    fallback = Format::kCsv;
  } else {
    cfg.command = Command::kVerify;
  }

  if (!kind.empty()) cfg.kind = parse_kind(kind);
  if (!x.empty()) cfg.x = Rational::parse(x);
  if (!set.empty()) cfg.set = SetDescriptor::parse(set);
  if (!ladder.empty()) std::tie(cfg.j_lo, cfg.j_hi) = parse_ladder(ladder);
  if (!domain.empty()) cfg.domain = parse_domain(domain);

  if (json && !format.empty() && format != "json") {
    throw UsageError("--json conflicts with --format " + format);
  }
  if (json || format == "json") {
    cfg.format = Format::kJson;
  } else if (format == "csv") {
    cfg.format = Format::kCsv;
  } else if (format == "text") {
    cfg.format = Format::kText;
  } else {
    cfg.format = fallback;
  }
  cfg.threads = threads_from_env();
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::ofstream file;
    std::ostream* os = &out;
    if (config.output) {
      file.open(*config.output);
      if (!file) throw ResourceError("cannot open " + *config.output + " for writing");
      os = &file;
    }
    int status = kExitOk;
    switch (config.command) {
      case Command::kExpand:
        status = run_expand(config, *os);
        break;
      case Command::kApprox:
        status = run_approx(config, *os);
        break;
      case Command::kMesh:
        status = run_mesh(config, *os);
        break;
      case Command::kDim:
        status = run_dim(config, *os);
        break;
      case Command::kCoverEgf:
        status = run_cover(config, *os);
        break;
      case Command::kVerify:
        status = run_verify(config, *os);
        break;
    }
    os->flush();
    return status;
  } catch (const UsageError& e) {
    err << "fracdim: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "fracdim: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "fracdim: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::bad_alloc&) {
    err << "fracdim: out of memory\n";
    return kExitResource;
  } catch (const std::exception& e) {
    err << "fracdim: internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace fracdim
