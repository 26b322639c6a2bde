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


#ifndef CTKIT_VERIFY_VERIFY_HPP_
#define CTKIT_VERIFY_VERIFY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctkit/gamma/state.hpp"
#include "ctkit/symcalc/multipoly.hpp"
#include "ctkit/symcalc/ratfun.hpp"

namespace ctkit::verify {

using gamma::GammaState;
using symcalc::MultiPoly;
using symcalc::RatFun;

enum class Engine { kGamma, kDGamma };

std::string_view engine_name(Engine e);
// Accepts "gamma" and "dgamma"; throws std::invalid_argument otherwise.
Engine parse_engine(std::string_view s);

enum class Expectation {
  kEqual,
  // omega(lhs) = t^k omega(rhs) and the A parts agree.
  kUnitRatio,
  // No invariance is expected; the difference is measured and reported.
  kDefect,
};

std::string_view expectation_name(Expectation e);

struct MoveInstance {
  std::string name;
  std::string lhs;  // DSL text
  std::string rhs;
  Expectation expected = Expectation::kEqual;
  int unit_exponent = 0;  // for kUnitRatio
};

struct EntryDiff {
  tangle::Label row = 0;
  tangle::Label col = 0;
  RatFun lhs;
  RatFun rhs;
};

struct MoveReport {
  std::string name;
  Engine engine = Engine::kGamma;
  Expectation expected = Expectation::kEqual;
  int expected_exponent = 0;
  bool passed = false;
  bool equal = false;
  // omega(lhs) / omega(rhs), when both sides evaluate.
  std::optional<RatFun> omega_ratio;
  // Set when the ratio is +-t^k.
  std::optional<int> unit_exponent;
  std::vector<EntryDiff> a_diff;
  std::string error;
};

MoveReport check_move(const MoveInstance& m, Engine engine);

// The built-in instances for an engine; H-vertex moves only for kDGamma.
std::vector<MoveInstance> builtin_moves(Engine engine);
// Instances whose name equals filter or starts with it; all when empty.
std::vector<MoveInstance> select_moves(Engine engine, std::string_view filter);
std::vector<MoveReport> builtin_suite(Engine engine, std::string_view filter = {});
bool all_passed(const std::vector<MoveReport>& reports);

std::string reports_to_json(const std::vector<MoveReport>& reports);
std::string reports_to_text(const std::vector<MoveReport>& reports);

// The undetermined-coefficient check for an H-vertex value of the form
// (p0, p1 r_i c_i + p2 r_i c_j + p3 r_j c_i + p4 r_j c_j) in plain Gamma.
struct NaiveReport {
  // One condition per independent entry of lhs - rhs over both R4
  // equations, with the nonzero factor in t removed. Each is affine in
  // p1..p4.
  std::vector<MultiPoly> conditions;
  // The relations p2 = 1 - p1, p3 = 1 - p1, p4 = p1 written as p2 + p1 - 1,
  // p3 + p1 - 1, p4 - p1.
  std::vector<MultiPoly> expected;
  bool linear = false;
  // The conditions span the same affine space as the expected relations.
  bool equivalent = false;
  // H with its two strands joined, under the relations.
  GammaState pinched;
  bool pinched_trivial_matrix = false;
  GammaState series;
  GammaState parallel;
  bool series_equals_parallel = false;
};

NaiveReport naive_h_constraints();
std::string naive_to_text(const NaiveReport& r);

}  // namespace ctkit::verify

#endif  // CTKIT_VERIFY_VERIFY_HPP_
