// Copyright 2026 The ctkit Authors.
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
#include "doctest.h"

#include <string>

#include "json.hpp"
#include "run.hpp"

using ctkit::testing::run;
using nlohmann::json;

namespace {

const char* kFive = "\"{1,4}+ {2,7}- {3,5}0 {6,9}0 {8,10}-\"";

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("--help").code == 0);
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("dgamma").code == 2);
  CHECK(run("dgamma --expr S[1] --gct \"{1,2}0\"").code == 2);
  CHECK(run("dgamma --expr-file /nonexistent/file").code == 2);
  CHECK(run("tabulate -n 0").code == 2);
  CHECK(run("tabulate -n 7").code == 2);
  CHECK(run("verify --engine foo").code == 2);
  CHECK(run("verify --move ZZZ").code == 2);
  CHECK(run("dgamma --expr \"X[1,\"").code == 1);
  CHECK(run("dgamma --gct \"{1,3}0\"").code == 1);
  CHECK(run("gamma --expr \"H[a; 1,2]\"").code == 1);
  CHECK(run("gamma --expr \"X[1,2] // m[1,2 > 3]\"").code == 0);
}

TEST_CASE("gamma output") {
  auto r = run("gamma --format json --expr \"X[1,2] X[3,4] X[5,6] // m[1,4 > 1] "
               "// m[2,5 > 2] // m[1,2 > 1] // m[3,6 > 3] // m[1,3 > 1]\"");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.contains("omega"));
}

TEST_CASE("five contact example") {
  const auto text = run(std::string("dgamma --gct ") + kFive);
  REQUIRE(text.code == 0);
  CHECK(text.out.find("unit: -t^-7") != std::string::npos);
  CHECK(text.out.find("vertices: h1=1 h2=2") != std::string::npos);

  const auto r = run(std::string("dgamma --format json --gct ") + kFive);
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["gct"] == "{1,4}+ {2,7}- {3,5}0 {6,9}0 {8,10}-");
  CHECK(j["unit_sign"] == -1);
  CHECK(j["unit_exponent"] == -7);
  CHECK(j["h_labeling"]["h1"] == "1");
  CHECK(j["h_labeling"]["h2"] == "2");
  for (const auto& p : j["piece_writhes"]) CHECK(p["writhe"] == 0);

  // Compiling to the DSL and evaluating that gives the same polynomial.
  const auto dsl = run(std::string("gct compile --emit-dsl --gct ") + kFive);
  REQUIRE(dsl.code == 0);
  std::string expr = dsl.out;
  while (!expr.empty() && expr.back() == '\n') expr.pop_back();
  const auto again = run("dgamma --format json --expr \"" + expr + "\"");
  REQUIRE(again.code == 0);
  CHECK(json::parse(again.out)["dgamma1"] == j["dgamma1"]);
}

TEST_CASE("gct subcommands") {
  const auto m = run("gct matrix --format json --gct \"{1,3}+ {2,4}0\"");
  REQUIRE(m.code == 0);
  CHECK(json::parse(m.out)["matrix"] == json::array({"0X", "X0"}));
  const auto c = run("gct compile --gct \"{1,2}0\"");
  REQUIRE(c.code == 0);
  CHECK(c.out.find("dsl:") != std::string::npos);
}

TEST_CASE("tabulate is independent of jobs") {
  for (const char* fmt : {"md", "csv", "json", "latex"}) {
    CAPTURE(fmt);
    const auto a = run(std::string("tabulate -n 2 --jobs 1 --format ") + fmt);
    const auto b = run(std::string("tabulate -n 2 --jobs 4 --format ") + fmt);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }
  const auto j = json::parse(run("tabulate -n 2 --format json").out);
  CHECK(j["rows"].size() == 27);
  CHECK(j["groups"] == 9);
  CHECK(j["diagrams"] == 27);
  const auto csv = run("tabulate -n 1 --format csv");
  CHECK(csv.out.rfind("notation,dgamma1,unit_exponent,group\n", 0) == 0);
}

TEST_CASE("verify") {
  const auto t = run("verify");
  CHECK(t.code == 0);
  CHECK(t.out.find("FAIL") == std::string::npos);
  const auto j = run("verify --engine dgamma --format json");
  REQUIRE(j.code == 0);
  const json v = json::parse(j.out);
  CHECK(v["passed"] == true);
  CHECK(v["moves"].size() == 15);
  const auto r4 = json::parse(run("verify --engine dgamma --move R4 --format json").out);
  CHECK(r4["moves"].size() == 8);
  CHECK(run("verify --naive").code == 0);
}

TEST_CASE("random diagrams") {
  const auto a = run("random -n 4 --seed 11");
  const auto b = run("random -n 4 --seed 11");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = run("random -n 4 --seed 11 --format json");
  REQUIRE(j.code == 0);
  CHECK(json::parse(j.out).size() == 4);
}
