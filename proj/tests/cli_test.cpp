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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fracdim/cli.hpp"

using namespace fracdim;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  try {
    const int status = run(parse_args(args), out, err);
    return {status, out.str(), err.str()};
  } catch (const UsageError& e) {
    return {kExitUsage, out.str(), e.what()};
  }
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("parsing the dim command") {
  const RunConfig cfg = parse_args({"dim", "--set", "sumset:2", "--log2-scales", "4..18"});
  CHECK(cfg.command == Command::kDim);
  CHECK(cfg.set == SetDescriptor::sumset(2));
  CHECK(cfg.j_lo == 4);
  CHECK(cfg.j_hi == 18);
  CHECK(cfg.format == Format::kJson);
  CHECK(cfg.seed == kDefaultSeed);
}

TEST_CASE("parsing the expand command") {
  const RunConfig cfg = parse_args({"expand", "--kind", "engel", "--x", "3/7"});
  CHECK(cfg.command == Command::kExpand);
  CHECK(cfg.kind == WordKind::kEngel);
  CHECK(cfg.x == Rational::parse("3/7"));
  CHECK(cfg.format == Format::kText);
}

TEST_CASE("usage errors name the offending flag") {
  const auto expect_usage = [](const std::vector<std::string>& args, const std::string& flag) {
    try {
      parse_args(args);
      FAIL("accepted invalid arguments");
    } catch (const UsageError& e) {
      CHECK_MESSAGE(std::string(e.what()).find(flag) != std::string::npos, e.what());
    }
  };
  expect_usage({"mesh", "--set", "cf:0"}, "--set");
  expect_usage({"mesh", "--set", "cf:1:alpha=2", "--log2-scale", "3"}, "--set");
  expect_usage({"expand", "--kind", "cf", "--x", "1/0"}, "--x");
  expect_usage({"expand", "--kind", "cf", "--x", "abc"}, "--x");
  expect_usage({"dim", "--set", "cf:1", "--log2-scales", "8..8"}, "--log2-scales");
  expect_usage({"dim", "--set", "cf:1", "--log2-scales", "9..3"}, "--log2-scales");
  expect_usage({"expand", "--kind", "cf", "--x", "1/3", "--bogus"}, "--bogus");
  expect_usage({"verify", "--suite", "nonsense"}, "--suite");
  expect_usage({"expand", "--kind", "sylvester", "--x", "1/3"}, "--kind");
  CHECK_THROWS_AS(parse_args({}), UsageError);
  CHECK_THROWS_AS(parse_args({"--help"}), HelpRequested);
}

TEST_CASE("expand output") {
  const auto text = invoke({"expand", "--kind", "engel", "--x", "3/7"});
  CHECK(text.status == kExitOk);
  CHECK(text.out == "[3,4,7] length=3 value=3/7\n");
  const auto json = invoke({"expand", "--kind", "egy", "--x", "4/5", "--json"});
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["kind"] == "egy");
  CHECK(j["x"] == "4/5");
  CHECK(j["digits"] == nlohmann::json::array({2, 4, 20}));
  CHECK(j["length"] == 3);
  const auto bad = invoke({"expand", "--kind", "cf", "--x", "1"});
  CHECK(bad.status == kExitUsage);
  CHECK(bad.err.find('\n') == bad.err.size() - 1);
}

TEST_CASE("mesh output") {
  const auto r = invoke({"mesh", "--set", "sumset:1", "--log2-scale", "4"});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "set,m,alpha,scale_log2,cells\nsumset,1,1,4,8\n");
  const auto d = invoke({"mesh", "--set", "cf:1", "--log2-scale", "2", "--domain", "0..1/2"});
  CHECK(d.out == "set,m,alpha,scale_log2,cells\ncf,1,1,2,2\n");
  const auto big = invoke({"mesh", "--set", "cf:1", "--log2-scale", "30"});
  CHECK(big.status == kExitResource);
}

TEST_CASE("dim output and side CSV") {
  const auto path = std::filesystem::temp_directory_path() / "fracdim_dim_test.csv";
  const auto r = invoke({"dim", "--set", "cf:1", "--log2-scales", "2..6", "--csv", path.string()});
  REQUIRE(r.status == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["set"] == "cf:1");
  CHECK(j["scales"] == nlohmann::json::array({2, 3, 4, 5, 6}));
  CHECK(j["counts"].size() == 5);
  CHECK(j["per_step_slopes"].size() == 4);
  CHECK(j.contains("slope"));
  CHECK(j.contains("residual"));
  const std::string csv = slurp(path);
  CHECK(csv.rfind("set,m,alpha,scale_log2,cells\ncf,1,1,2,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  std::filesystem::remove(path);
}

TEST_CASE("approx reports the bound") {
  const auto r = invoke({"approx", "--kind", "egy", "--x", "2/5", "--m", "3", "--n", "2", "--json"});
  CHECK(r.status == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["digits"] == nlohmann::json::array({3, 15, 65536}));
  CHECK(j["bound"] == "1/256");
  CHECK(j["error"] == "1/65536");
  CHECK(j["pass"] == true);
  const auto outside = invoke({"approx", "--kind", "engel", "--x", "1/2", "--m", "2", "--n", "3"});
  CHECK(outside.status == kExitUsage);
}

TEST_CASE("large digits are emitted as JSON strings") {
  const auto r = invoke({"approx", "--kind", "egy", "--x", "1/5", "--m", "4", "--n", "4", "--json"});
  REQUIRE(r.status == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["digits"][0] == 5);
  CHECK(j["digits"].back().is_string());
}

TEST_CASE("cover-egf rows") {
  const auto r = invoke({"cover-egf", "--m", "1", "--n", "2"});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "word,lo,length\n\"[]\",0,1/2\n\"[1]\",1,1/4\n\"[2]\",1/2,1/4\n");
}

TEST_CASE("verify exit status and table") {
  const auto r = invoke({"verify", "--suite", "lemma41", "--seed", "7"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("engel_approximate n=8 m=4") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  const auto g = invoke({"verify", "--suite", "gaps", "--format", "csv"});
  CHECK(g.out.rfind("check,cases,failures,status,detail\n", 0) == 0);
}

TEST_CASE("identical arguments give identical output") {
  const std::vector<std::string> args{"verify", "--suite", "lemma31", "--seed", "99"};
  CHECK(invoke(args).out == invoke(args).out);
  const std::vector<std::string> dim{"dim", "--set", "engel-leq:2", "--log2-scales", "3..11"};
  CHECK(invoke(dim).out == invoke(dim).out);
}

TEST_CASE("worker count comes from the environment") {
  setenv("FRACDIM_THREADS", "3", 1);
  CHECK(parse_args({"mesh", "--set", "cf:1", "--log2-scale", "3"}).threads == 3);
  setenv("FRACDIM_THREADS", "lots", 1);
  CHECK_THROWS_AS(parse_args({"mesh", "--set", "cf:1", "--log2-scale", "3"}), UsageError);
  unsetenv("FRACDIM_THREADS");
  CHECK(parse_args({"mesh", "--set", "cf:1", "--log2-scale", "3"}).threads == 0);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "fracdim_out_test.txt";
  const auto r = invoke({"expand", "--kind", "cf", "--x", "3/7", "-o", path.string()});
  CHECK(r.status == kExitOk);
  CHECK(r.out.empty());
  CHECK(slurp(path) == "[2,3] length=2 value=3/7\n");
  std::filesystem::remove(path);
}
