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

#include <set>
#include <string>

#include "ctkit/dgamma/dgamma.hpp"
#include "ctkit/errors.hpp"
#include "ctkit/gamma/gamma.hpp"
#include "ctkit/gct/census.hpp"
#include "ctkit/gct/diagram.hpp"
#include "ctkit/symcalc/format.hpp"
#include "ctkit/tangle/dsl.hpp"
#include "ctkit/tangle/geometry.hpp"

using namespace ctkit;
using namespace ctkit::gct;
using symcalc::parse_ratfun;
using symcalc::RatFun;

namespace {

const char* kFigure =
    "{1,4}+ {2,7}- {3,5}0 {6,9}0 {8,10}-";

RatFun value(const char* notation, bool frame_zero = true) {
  CompileOptions opts;
  opts.frame_zero = frame_zero;
  return dgamma::eval_dgamma_omega(compile(parse_gct(notation), opts));
}

// Matchings of 1..2n counted by pairing the smallest free site.
std::uint64_t count_matchings(int n) {
  return n <= 1 ? 1 : static_cast<std::uint64_t>(2 * n - 1) * count_matchings(n - 1);
}

bool loose(const Diagram& d) {
  for (const auto& c : d.contacts) {
    if (c.sigma != 0 && c.b == c.a + 1) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("parse and print") {
  const Diagram d = parse_gct(kFigure);
  REQUIRE(d.size() == 5);
  CHECK(d.contacts[0] == Contact{1, 4, 1});
  CHECK(d.contacts[1] == Contact{2, 7, -1});
  CHECK(d.contacts[2] == Contact{3, 5, 0});
  CHECK(print(d) == kFigure);
  CHECK(parse_gct("{{1,4}_1,{2,7}_{-1},{3,5}_0,{6,9}_0,{8,10}_{-1}}") == d);
  CHECK(parse_gct(to_json(d)) == d);
  CHECK(parse_gct(R"([{"a":2,"b":7,"s":-1},{"a":1,"b":4,"s":1},)"
                  R"({"a":3,"b":5,"s":0},{"a":6,"b":9,"s":0},{"a":8,"b":10,"s":-1}])") == d);
  // Contacts are sorted by first endpoint.
  CHECK(print(parse_gct("{3,4}0 {1,2}+")) == "{1,2}+ {3,4}0");

  const char* twenty =
      "{1,14}+ {2,11}0 {3,13}0 {4,12}+ {5,8}- {6,9}+ {7,19}- {10,18}0 {15,20}- {16,17}0";
  CHECK(print(parse_gct(twenty)) == twenty);
  CHECK(parse_gct(
            "{{1,14}_1,{2,11}_0,{3,13}_0,{4,12}_1,{5,8}_{-1},{6,9}_1,{7,19}_{-1},"
            "{10,18}_0,{15,20}_{-1},{16,17}_0}") == parse_gct(twenty));

  for (const char* bad : {"", "{1,2}+ {2,3}0", "{1,3}0 {2,5}0", "{1,2}x", "{2,1}0",
                          "{1,2}0 {3,4", "[{\"a\":1}]", "{1,1}0"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_gct(bad), InvalidDiagram);
  }
}

TEST_CASE("relations") {
  CHECK(relation({1, 2, 0}, {3, 4, 0}) == Relation::kSeries);
  CHECK(relation({1, 4, 0}, {2, 3, 0}) == Relation::kParallel);
  CHECK(relation({2, 3, 0}, {1, 4, 0}) == Relation::kParallel);
  CHECK(relation({1, 3, 0}, {2, 4, 0}) == Relation::kCross);
  CHECK_THROWS_AS(relation({1, 3, 0}, {3, 4, 0}), InvalidPair);

  const std::vector<std::string> m = relation_matrix(parse_gct(kFigure));
  const std::vector<std::string> expected = {
      "0XXSS", "X0PXS", "XP0SS", "SXS0X", "SSSX0",
  };
  CHECK(m == expected);

  // Shifting all sites keeps every relation.
  const Diagram d = random_diagram(6, 3);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Contact p = d.contacts[i], q = d.contacts[j];
      const Relation r = relation(p, q);
      p.a += 7, p.b += 7, q.a += 7, q.b += 7;
      CHECK(relation(p, q) == r);
    }
  }
}

TEST_CASE("insert_clasp") {
  const Diagram d = parse_gct("{1,2}0 {3,4}0");
  CHECK(print(insert_clasp(d, 0, 1, 1)) == "{1,2}0 {3,6}+ {4,5}0");
  CHECK(print(insert_clasp(d, 0, 1, -1)) == "{1,2}0 {3,6}- {4,5}0");
  CHECK(print(insert_clasp(d, 1, 0, 1)) == "{1,2}0 {3,6}+ {4,5}0");
  CHECK_THROWS_AS(insert_clasp(parse_gct("{1,3}0 {2,4}0"), 0, 1, 1), NotSeries);
  CHECK_THROWS_AS(insert_clasp(parse_gct("{1,4}0 {2,3}0"), 0, 1, 1), NotSeries);
  CHECK_THROWS_AS(insert_clasp(d, 0, 2, 1), InvalidDiagram);
  CHECK_THROWS_AS(insert_clasp(d, 0, 1, 2), InvalidDiagram);
}

TEST_CASE("enumerate") {
  CHECK(enumerate(1).size() == 3);
  CHECK(enumerate(2).size() == 27);
  CHECK(enumerate(3).size() == 405);
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t pow3 = 1;
    for (int i = 0; i < n; ++i) pow3 *= 3;
    CHECK(enumerate_count(n) == count_matchings(n) * pow3);
  }
  for (int n = 1; n <= 3; ++n) {
    const std::vector<Diagram> all = enumerate(n);
    std::set<std::string> seen;
    for (const auto& d : all) seen.insert(print(d));
    CHECK(seen.size() == all.size());
    CHECK(all == enumerate(n));

    std::vector<Diagram> kept;
    for (const auto& d : all) {
      CHECK(has_loose_clasp(d) == loose(d));
      if (!loose(d)) kept.push_back(d);
    }
    CHECK(enumerate(n, true) == kept);
  }
  // One contact: only the hard contact survives the filter.
  CHECK(enumerate(1, true).size() == 1);
}

TEST_CASE("random diagrams") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int n = 1 + static_cast<int>(seed % 10);
    const Diagram d = random_diagram(n, seed);
    CHECK(d.size() == static_cast<std::size_t>(n));
    CHECK(parse_gct(print(d)) == d);
    CHECK(random_diagram(n, seed) == d);
  }
  CHECK_FALSE(random_diagram(8, 1) == random_diagram(8, 2));
}

TEST_CASE("compile structure") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Diagram d = random_diagram(1 + static_cast<int>(seed % 5), seed);
    CAPTURE(print(d));
    for (bool fz : {false, true}) {
      CompileOptions opts;
      opts.frame_zero = fz;
      const tangle::Expr e = compile(d, opts);
      const tangle::ValidationReport v = tangle::validate(e);
      CHECK(v.ok());
      CHECK(v.strand_count == 1);
      std::size_t hard = 0;
      for (const auto& c : d.contacts) hard += c.sigma == 0;
      CHECK(v.vertex_names.size() == hard);
      if (fz) {
        for (const auto& p : tangle::piece_writhes(e)) CHECK(p.writhe == 0);
      }
      // The emitted text re-parses to the same invariant.
      CHECK(dgamma::eval_dgamma_omega(tangle::parse_expr(tangle::to_dsl(e))) ==
            dgamma::eval_dgamma_omega(e));
    }
  }
}

TEST_CASE("small diagram values") {
  using symcalc::equal_up_to_unit;
  CHECK(equal_up_to_unit(value("{1,2}0"), parse_ratfun("t*(1 - h1)")));
  CHECK(equal_up_to_unit(value("{1,2}+"), parse_ratfun("1")));
  CHECK(equal_up_to_unit(value("{1,2}0 {3,4}0"), parse_ratfun("(1 - h1)*(1 - h2)")));
  CHECK(equal_up_to_unit(value("{1,4}0 {2,3}0"), parse_ratfun("(h2 - 1)*(1 - t + h1*t)")));
  CHECK(equal_up_to_unit(
      value("{1,3}0 {2,4}0"),
      parse_ratfun("-h1*(h2 - 1)*(t^3 - t^2 + 1)*t^2 + h2*(t^4 - t^3 + 2*t - 1)*t"
                   " - t^5 + 2*t^4 - 3*t^3 + 3*t^2 - 3*t + 2")));
  // Both clasp signs on interleaved sites give trefoils, whose Alexander
  // polynomial at t^2 is t^4 - t^2 + 1.
  CHECK(equal_up_to_unit(value("{1,3}+ {2,4}+"), parse_ratfun("t^4 - t^2 + 1")));
  CHECK(equal_up_to_unit(value("{1,3}- {2,4}-"), parse_ratfun("t^4 - t^2 + 1")));
}

TEST_CASE("clasp-only diagrams are knots") {
  // Without hard contacts the value is the plain Gamma value at t^2.
  for (int n = 1; n <= 3; ++n) {
    for (const auto& d : enumerate(n)) {
      bool clasps = true;
      for (const auto& c : d.contacts) clasps = clasps && c.sigma != 0;
      if (!clasps) continue;
      CAPTURE(print(d));
      const tangle::Expr e = compile(d);
      const RatFun g = symcalc::substitute(gamma::eval_gamma_omega(e),
                                           {{"t", parse_ratfun("t^2")}});
      CHECK(symcalc::equal_up_to_unit(dgamma::eval_dgamma_omega(e), g));
    }
  }
}

TEST_CASE("five contact example") {
  const RatFun expected = parse_ratfun(
      "h1*t^6 - 2*h1*t^5 - h1*t^4 + 6*h1*t^3 - h1*h2*t^3 + h2*t^3 - 6*h1*t^2"
      " - 2*h2*t^2 - 2*h1*t^-2 + 10*h1*h2*t^-2 + 2*h2*t^-2 + h1*t^-3 + 13*h2*t^-3"
      " - 4*h1*h2*t^-4 - 11*h2*t^-4 + h1*h2*t^-5 - 3*h2*t^-5 + 5*h2*t^-6 - h2*t^-7"
      " - 3*h1*t + 5*h1*h2*t + h2*t - 2*h1*t^-1 - 5*h1*h2*t^-1 - 11*h2*t^-1 + 7*h1"
      " - 5*h1*h2 + 5*h2 - t^6 + 2*t^5 - 2*t^4 + 7*t^2 - 8*t^-2 + 3*t^-4 - t^-5"
      " - 10*t + 9*t^-1 + 2");
  const dgamma::InvariantReport r = dgamma::dgamma1(compile(parse_gct(kFigure)));
  CHECK(symcalc::equal_up_to_unit(symcalc::RatFun(r.dgamma1.poly), expected));
  CHECK(r.h_labeling.at("1") == 1);
  CHECK(r.h_labeling.at("2") == 2);
  CHECK(symcalc::equal_up_to_unit(value(kFigure, false), expected));
}

TEST_CASE("census of two contacts") {
  const Census c = tabulate(2);
  REQUIRE(c.rows.size() == 27);
  std::size_t members = 0;
  const CensusGroup* unknot = nullptr;
  for (const auto& g : c.groups) {
    members += g.members.size();
    if (g.key == "1") unknot = &g;
  }
  CHECK(members == 27);
  REQUIRE(unknot != nullptr);
  CHECK(unknot->members.size() == 8);

  auto group_of = [&](const char* notation) {
    for (const auto& row : c.rows) {
      if (print(row.diagram) == notation) return row.group;
    }
    return -1;
  };
  const int g = group_of("{1,3}+ {2,4}+");
  CHECK(g > 0);
  CHECK(group_of("{1,3}- {2,4}-") == g);
  CHECK(c.groups[static_cast<std::size_t>(g - 1)].key == "t^4 - t^2 + 1");

  CensusOptions many;
  many.jobs = 4;
  for (CensusFormat f : {CensusFormat::kMarkdown, CensusFormat::kCsv, CensusFormat::kJson,
                         CensusFormat::kLatex}) {
    CHECK(format_census(tabulate(2, many), f) == format_census(c, f));
  }
  const std::string csv = format_census(c, CensusFormat::kCsv);
  CHECK(csv.rfind("notation,dgamma1,unit_exponent,group\n", 0) == 0);
}

TEST_CASE("hard-only census of three contacts") {
  CensusOptions opts;
  opts.hard_only = true;
  const Census c = tabulate(3, opts);
  CHECK(c.rows.size() == 15);
  CHECK(c.groups.size() == 15);
}
