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

#include <random>
#include <string>

#include "ctkit/errors.hpp"
#include "ctkit/gamma/gamma.hpp"
#include "ctkit/symcalc/format.hpp"
#include "ctkit/tangle/dsl.hpp"
#include "knots.hpp"

using namespace ctkit;
using namespace ctkit::gamma;
using symcalc::parse_ratfun;

namespace {

RatFun R(const char* s) { return parse_ratfun(s); }

GammaState make(const char* omega,
                std::vector<std::tuple<Label, Label, const char*>> entries) {
  GammaState st;
  st.omega = R(omega);
  for (const auto& [i, j, v] : entries) {
    st.labels.push_back(i);
    st.labels.push_back(j);
    st.set(i, j, R(v));
  }
  std::sort(st.labels.begin(), st.labels.end());
  st.labels.erase(std::unique(st.labels.begin(), st.labels.end()), st.labels.end());
  return st;
}

GammaState G(const char* dsl) { return eval_gamma(tangle::parse_expr(dsl)); }

// Labels for the worked example: i, j, v and a stand-in for label 0.
constexpr Label kI = 30, kJ = 31, kV = 32, kZero = 20;

}  // namespace

TEST_CASE("generators") {
  const auto s = tangle::Expr::strand(1);
  CHECK(gen(s.root()) == make("1", {{1, 1, "1"}}));
  const auto xp = tangle::Expr::crossing(1, 2, 1);
  CHECK(gen(xp.root()) == make("1", {{1, 1, "1"}, {1, 2, "1 - t"}, {2, 2, "t"}}));
  const auto xm = tangle::Expr::crossing(1, 2, -1);
  CHECK(gen(xm.root()) ==
        make("1", {{1, 1, "1"}, {1, 2, "1 - t^-1"}, {2, 2, "t^-1"}}));
  const auto h = tangle::Expr::hvertex("A", 1, 2);
  CHECK_THROWS_AS(gen(h.root()), UnsupportedGenerator);
}

TEST_CASE("worked chain: two crossings, then the full tangle") {
  using tangle::Expr;
  const GammaState x14x23 =
      disjoint(gen(Expr::crossing(1, 4, 1).root()), gen(Expr::crossing(2, 3, 1).root()));
  const GammaState b = merge_state(x14x23, 1, 3, kJ);
  CHECK(b == make("1", {{2, kJ, "1 - t"},
                        {2, 2, "1"},
                        {2, 4, "(1 - t)^2"},
                        {kJ, kJ, "t"},
                        {kJ, 4, "t*(1 - t)"},
                        {4, 4, "t"}}));

  const GammaState k = merge_state(b, 2, 4, kV);
  CHECK(k == make("2*t - t^2", {{kJ, kJ, "1/(2 - t)"},
                                {kJ, kV, "(1 - t)/(2 - t)"},
                                {kV, kJ, "(1 - t)/(2 - t)"},
                                {kV, kV, "1/(2 - t)"}}));

  const GammaState with_x = disjoint(gen(Expr::crossing(6, kZero, -1).root()), k);
  const GammaState step1 = merge_state(with_x, kZero, kV, kZero);
  CHECK(step1 == make("2*t - t^2", {{6, 6, "1"},
                                    {6, kZero, "1 - t^-1"},
                                    {kJ, kJ, "1/(2 - t)"},
                                    {kZero, kJ, "(1 - t)/(2 - t)"},
                                    {kJ, kZero, "t^-1*(1 - t)/(2 - t)"},
                                    {kZero, kZero, "t^-1/(2 - t)"}}));

  const GammaState d = merge_state(step1, kZero, 6, kI);
  const GammaState expected =
      make("2*t - t^2", {{kI, kI, "1 - t^-1 + t^-1/(2 - t)"},
                         {kJ, kJ, "1/(2 - t)"},
                         {kJ, kI, "t^-1*(1 - t)/(2 - t)"},
                         {kI, kJ, "(1 - t)/(2 - t)"}});
  CHECK(d == expected);

  // The engine agrees on the same expression written in the DSL.
  const std::string dsl = "Xb[6,20] X[1,4] X[2,3] // m[1,3 > 31] // m[2,4 > 32]"
                          " // m[20,32 > 20] // m[20,6 > 30]";
  CHECK(G(dsl.c_str()) == expected);
  // And on the one-pass merge order.
  CHECK(G("Xb[6,20] X[1,4] X[2,3] // m[20,2 > 20] // m[20,4 > 20]"
          " // m[20,6 > 30] // m[1,3 > 31]") == expected);
}

TEST_CASE("trefoil and curl") {
  CHECK(G("X[1,4] X[5,2] X[3,6] // m[1,2,3,4,5,6 > 7]") ==
        make("t^3 - t^2 + t", {{7, 7, "1"}}));
  CHECK(G("X[1,2] // m[1,2 > 3]") == make("t", {{3, 3, "1"}}));
  CHECK(G("Xb[1,2] // m[1,2 > 3]") == make("t^-1", {{3, 3, "1"}}));
  CHECK(G("S[1] S[2] // m[1,2 > 5]") == make("1", {{5, 5, "1"}}));
}

TEST_CASE("disjoint rejects shared labels") {
  const GammaState a = make("1", {{1, 1, "1"}});
  CHECK_THROWS_AS(disjoint(a, a), LabelClash);
  // Unit element: a trivial strand joined and merged away leaves omega alone.
  const GammaState c = G("X[1,2] // m[1,2 > 3]");
  const GammaState u = merge_state(disjoint(c, make("1", {{9, 9, "1"}})), 3, 9, 3);
  CHECK(u == c);
}

TEST_CASE("degenerate merge") {
  GammaState st = make("1", {{1, 2, "1"}, {2, 2, "1"}, {1, 1, "1"}});
  CHECK_THROWS_AS(merge_state(st, 1, 2, 3), DegenerateMerge);
}

TEST_CASE("knot diagrams agree with the Wirtinger oracle") {
  for (const auto* pd : {&testing::kTrefoilPd, &testing::kFigureEightPd,
                         &testing::kCinquefoilPd}) {
    const std::string dsl = testing::pd_to_dsl(*pd);
    CAPTURE(dsl);
    const GammaState st = G(dsl.c_str());
    REQUIRE(st.labels.size() == 1);
    const Label f = st.labels.front();
    CHECK(st.entries.size() == 1);
    CHECK(st.at(f, f) == RatFun::constant(1));
    CHECK(symcalc::equal_up_to_unit(st.omega, testing::alexander_oracle(*pd)));
  }
  const std::string fig8 = testing::pd_to_dsl(testing::kFigureEightPd);
  CHECK(symcalc::equal_up_to_unit(G(fig8.c_str()).omega, R("t^2 - 3*t + 1")));
}

TEST_CASE("engine matches the field-level fold") {
  std::mt19937 rng(20261016);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    // Three random crossings over labels 1..6, merged along a random chain.
    std::vector<Label> perm{1, 2, 3, 4, 5, 6};
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<tangle::Expr> parts;
    for (int c = 0; c < 3; ++c) {
      parts.push_back(
          tangle::Expr::crossing(perm[2 * c], perm[2 * c + 1], coin(rng) ? 1 : -1));
    }
    const tangle::Expr e =
        tangle::Expr::merge_all(tangle::Expr::disjoint(parts), {1, 2, 3, 4, 5, 6}, 7);
    GammaState fold = gen(parts[0].root());
    for (int c = 1; c < 3; ++c) fold = disjoint(fold, gen(parts[c].root()));
    fold = merge_state(fold, 1, 2, 7);
    for (Label l = 3; l <= 6; ++l) fold = merge_state(fold, 7, l, 7);
    CHECK(eval_gamma(e) == fold);
    CHECK(eval_gamma_omega(e) == fold.omega);
  }
}

TEST_CASE("independent merges commute") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Label> perm{1, 2, 3, 4, 5, 6, 7, 8};
    std::shuffle(perm.begin(), perm.end(), rng);
    GammaState st = make("1", {});
    for (int c = 0; c < 4; ++c) {
      st = disjoint(st, gen(tangle::Expr::crossing(perm[2 * c], perm[2 * c + 1],
                                                   coin(rng) ? 1 : -1)
                                .root()));
    }
    // (1,2)->10 and (3,4)->11 touch disjoint labels.
    const GammaState a = merge_state(merge_state(st, 1, 2, 10), 3, 4, 11);
    const GammaState b = merge_state(merge_state(st, 3, 4, 11), 1, 2, 10);
    CHECK(a == b);
  }
}
