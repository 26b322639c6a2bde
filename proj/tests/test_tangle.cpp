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
#include <set>
#include <string>

#include "ctkit/dgamma/dgamma.hpp"
#include "ctkit/errors.hpp"
#include "ctkit/gamma/gamma.hpp"
#include "ctkit/tangle/dsl.hpp"
#include "ctkit/tangle/expr.hpp"
#include "ctkit/tangle/geometry.hpp"

using namespace ctkit;
using namespace ctkit::tangle;

namespace {

constexpr const char* kTrefoil = "X[1,4] X[5,2] X[3,6] // m[1,2,3,4,5,6 > 7]";
constexpr const char* kE =
    "H[A; 10,4] H[B; 3,7] X[6,1] Xb[8,2] Xb[5,9] // m[1,2,3,4,5,6,7,8,9,10 > 11]";

bool has_violation(const ValidationReport& r, Violation::Kind k) {
  for (const auto& v : r.violations) {
    if (v.kind == k) return true;
  }
  return false;
}

// Random valid expression: atoms over fresh labels followed by random merges.
Expr random_expr(std::mt19937& rng) {
  std::uniform_int_distribution<int> natoms(1, 5), kind(0, 3), pct(0, 99);
  std::vector<Expr> parts;
  std::vector<Label> live;
  Label next = 1;
  int vertex = 0;
  for (int i = natoms(rng); i > 0; --i) {
    switch (kind(rng)) {
      case 0:
        parts.push_back(Expr::strand(next));
        live.push_back(next++);
        break;
      case 1:
      case 2:
        parts.push_back(Expr::crossing(next, next + 1, kind(rng) < 2 ? 1 : -1));
        live.push_back(next++);
        live.push_back(next++);
        break;
      default:
        parts.push_back(Expr::hvertex("v" + std::to_string(vertex++), next, next + 1));
        live.push_back(next++);
        live.push_back(next++);
        break;
    }
  }
  std::shuffle(live.begin(), live.end(), rng);
  Expr e = Expr::disjoint(parts);
  while (live.size() > 1 && pct(rng) < 80) {
    const Label a = live.back();
    live.pop_back();
    const Label b = live.back();
    live.pop_back();
    Label k = next++;
    if (pct(rng) < 30) k = a;
    e = Expr::merge(e, a, b, k);
    live.insert(live.begin() + static_cast<long>(live.size() / 2), k);
  }
  return e;
}

}  // namespace

TEST_CASE("parse and validate the reference expressions") {
  const Expr t = parse_expr(kTrefoil);
  const ValidationReport rt = validate(t);
  CHECK(rt.ok());
  CHECK(rt.live_labels == std::vector<Label>{7});
  CHECK(rt.vertex_names.empty());
  CHECK(rt.strand_count == 1);
  CHECK(atoms(t).size() == 3);
  CHECK(merges(t).size() == 5);

  const ValidationReport re = validate(parse_expr(kE));
  CHECK(re.ok());
  CHECK(re.strand_count == 1);
  CHECK(re.vertex_names == std::vector<std::string>{"A", "B"});

  const Expr s = parse_expr("S[1]");
  CHECK(s.root().kind == NodeKind::kStrand);
  CHECK(s.root().a == 1);
}

TEST_CASE("label discipline") {
  const ValidationReport dup = validate(parse_syntax("X[1,2] X[1,3]"));
  CHECK(has_violation(dup, Violation::kDuplicateLabel));
  CHECK_THROWS_AS(parse_expr("X[1,2] X[1,3]"), LabelClash);
  CHECK(has_violation(validate(parse_syntax("X[1,2] // m[1,3 > 4]")),
                      Violation::kDeadLabel));
  CHECK(has_violation(validate(parse_syntax("X[1,2] // m[1,1 > 4]")),
                      Violation::kSelfMerge));
  CHECK(has_violation(validate(parse_syntax("X[1,2] S[3] // m[1,2 > 3]")),
                      Violation::kResultClash));
  CHECK(has_violation(validate(parse_syntax("H[A; 1,2] H[A; 3,4]")),
                      Violation::kDuplicateVertex));
  CHECK(has_violation(validate(parse_syntax("S[0]")), Violation::kBadLabel));
  CHECK_THROWS_AS(parse_expr("X[1,2] // m[1,3 > 4]"), LabelError);
  // Result label reuse: consume then rebind.
  CHECK(validate(parse_syntax("X[1,2] // m[1,2 > 1]")).ok());
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_expr("X[1,2] Q[3]");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
  CHECK_THROWS_AS(parse_expr(""), ParseError);
  CHECK_THROWS_AS(parse_expr("X[1,2] // m[1 > 3]"), ParseError);
  CHECK_THROWS_AS(parse_expr("X[1,2] / m[1,2 > 3]"), ParseError);
  CHECK_THROWS_AS(parse_expr("X[1 2]"), ParseError);
  CHECK_THROWS_AS(parse_expr("H[; 1,2]"), ParseError);
}

TEST_CASE("canonical text") {
  CHECK(to_dsl(parse_expr(kTrefoil)) == kTrefoil);
  CHECK(to_dsl(parse_expr(kE)) == kE);
  CHECK(to_dsl(parse_expr("  X[1,2]   //m[1,2>3]")) == "X[1,2] // m[1,2 > 3]");
  CHECK(to_dsl(parse_expr("X[1,2] X[3,4] // m[1,2 > 5] // m[5,3 > 5] // m[4,5 > 6]")) ==
        "X[1,2] X[3,4] // m[1,2,3 > 5] // m[4,5 > 6]");
}

TEST_CASE("round trip is idempotent on random expressions") {
  std::mt19937 rng(20261016);
  for (int i = 0; i < 200; ++i) {
    const Expr e = random_expr(rng);
    REQUIRE(validate(e).ok());
    const std::string once = to_dsl(e);
    CAPTURE(once);
    CHECK(to_dsl(parse_expr(once)) == once);
  }
}

TEST_CASE("multi-merge equals the chain of binary merges") {
  const Expr multi = parse_expr(kTrefoil);
  const Expr binary = parse_expr(
      "X[1,4] X[5,2] X[3,6] // m[1,2 > 7] // m[7,3 > 7] // m[7,4 > 7]"
      " // m[7,5 > 7] // m[7,6 > 7]");
  CHECK(gamma::eval_gamma(multi) == gamma::eval_gamma(binary));
  const Expr pairwise = parse_expr(
      "X[1,4] X[5,2] X[3,6] // m[1,2 > 8] // m[3,4 > 9] // m[5,6 > 10]"
      " // m[8,9 > 11] // m[11,10 > 7]");
  CHECK(gamma::eval_gamma(multi) == gamma::eval_gamma(pairwise));
}

TEST_CASE("geometry and piece writhes") {
  const auto straight = piece_writhes(parse_expr("S[1]"));
  REQUIRE(straight.size() == 1);
  CHECK(straight[0].piece == 0);
  CHECK(straight[0].writhe == 0);

  const auto curl = piece_writhes(parse_expr("X[1,2] // m[1,2 > 3]"));
  REQUIRE(curl.size() == 1);
  CHECK(curl[0].writhe == 1);

  // Four vertex passages split the strand into five pieces; every crossing
  // joins two different pieces.
  const Geometry g = derive_geometry(parse_expr(kE));
  REQUIRE(g.strands.size() == 1);
  CHECK(g.strands[0].label == 11);
  CHECK(g.strands[0].segments.size() == 10);
  const auto we = piece_writhes(parse_expr(kE));
  CHECK(we.size() == 5);
  for (const auto& p : we) CHECK(p.writhe == 0);

  const auto two = piece_writhes(parse_expr("X[1,2] H[A; 3,4] Xb[5,6] // m[1,2,3,5,6 > 7]"));
  // Strand 4 comes first and is cut by its own passage.
  REQUIRE(two.size() == 4);
  CHECK(two[0].strand == 4);
  CHECK(two[1].strand == 4);
  CHECK(two[2].writhe == 1);
  CHECK(two[3].writhe == -1);
  CHECK(two[3].strand == 7);
}

TEST_CASE("chain form and frame zero") {
  const Expr e = parse_expr(kE);
  const Expr c = chain_form(e);
  CHECK(validate(c).live_labels == std::vector<Label>{11});
  CHECK(dgamma::eval_dgamma(c) == dgamma::eval_dgamma(e));

  const Expr z = frame_zero(e);
  for (const auto& p : piece_writhes(z)) CHECK(p.writhe == 0);
  CHECK(validate(z).live_labels == std::vector<Label>{11});

  const Expr t = frame_zero(parse_expr(kTrefoil));
  for (const auto& p : piece_writhes(t)) CHECK(p.writhe == 0);
  CHECK(atoms(t).size() == 6);
}
