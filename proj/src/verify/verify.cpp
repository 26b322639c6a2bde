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


#include "ctkit/verify/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "ctkit/dgamma/dgamma.hpp"
#include "ctkit/errors.hpp"
#include "ctkit/gamma/gamma.hpp"
#include "ctkit/symcalc/format.hpp"
#include "ctkit/tangle/dsl.hpp"

namespace ctkit::verify {
namespace {

using symcalc::Rational;
using tangle::Label;

GammaState evaluate(Engine engine, const std::string& text) {
  const tangle::Expr e = tangle::parse_expr(text);
  return engine == Engine::kGamma ? gamma::eval_gamma(e) : dgamma::eval_dgamma(e);
}

std::optional<int> unit_exponent_of(const RatFun& r) {
  if (!r.is_polynomial() || !r.num().is_t_monomial()) return std::nullopt;
  if (r.num().leading().coef != 1) return std::nullopt;
  return r.num().min_degree(0);
}

std::string crossing(int sign, Label over, Label under) {
  return std::string(sign > 0 ? "X[" : "Xb[") + std::to_string(over) + "," +
         std::to_string(under) + "]";
}

std::vector<MoveInstance> classical(Engine engine) {
  const Expectation r1 =
      engine == Engine::kGamma ? Expectation::kUnitRatio : Expectation::kDefect;
  return {
      {"R1+", "X[1,2] // m[1,2 > 3]", "S[3]", r1, 1},
      {"R1-", "Xb[1,2] // m[1,2 > 3]", "S[3]", r1, -1},
      {"R2", "X[1,2] Xb[3,4] // m[1,3 > 5] // m[2,4 > 6]", "S[5] S[6]",
       Expectation::kEqual, 0},
      {"R2b", "X[1,2] Xb[3,4] // m[1,3 > 5] // m[4,2 > 6]", "S[5] S[6]",
       Expectation::kEqual, 0},
      {"R3", "X[1,2] X[4,3] X[5,6] // m[1,4 > 1] // m[2,5 > 2] // m[3,6 > 3]",
       "X[1,6] X[2,3] X[4,5] // m[1,4 > 1] // m[2,5 > 2] // m[3,6 > 3]",
       Expectation::kEqual, 0},
  };
}

// A third strand passes over (or under) the vertex from one side to the
// other. Variants differ in over/under and in the direction of the passing
// strand.
std::vector<MoveInstance> reidemeister4() {
  std::vector<MoveInstance> out;
  const char* names = "abcd";
  for (int v = 0; v < 4; ++v) {
    const bool over = v < 2;
    const std::string pass = v % 2 == 0 ? " // m[3,5 > 3]" : " // m[5,3 > 3]";
    for (int sg : {1, -1}) {
      const std::string atoms =
          "H[a; 1,2] " +
          (over ? crossing(sg, 3, 4) + " " + crossing(-sg, 5, 6)
                : crossing(sg, 4, 3) + " " + crossing(-sg, 6, 5));
      out.push_back({std::string("R4") + names[v] + (sg > 0 ? "+" : "-"),
                     atoms + pass + " // m[1,4 > 1] // m[6,2 > 2]",
                     atoms + pass + " // m[4,1 > 1] // m[2,6 > 2]",
                     Expectation::kEqual, 0});
    }
  }
  return out;
}

// Two crossings of the vertex strands move through the vertex together.
std::vector<MoveInstance> pass_through() {
  std::vector<MoveInstance> out;
  for (int sg : {1, -1}) {
    const std::string atoms =
        crossing(-sg, 1, 2) + " " + crossing(sg, 7, 8) + " H[v; 3,4]";
    out.push_back({std::string("HPassThrough") + (sg > 0 ? "+" : "-"),
                   atoms + " // m[7,3 > 5] // m[4,1,8,2 > 6]",
                   atoms + " // m[3,7 > 5] // m[1,4,8,2 > 6]",
                   Expectation::kEqual, 0});
  }
  return out;
}

// Splits p into coefficients (polynomials in t) of monomials in the other
// symbols.
std::map<std::vector<std::int32_t>, MultiPoly> split_by_t(const MultiPoly& p) {
  std::map<std::vector<std::int32_t>, std::vector<symcalc::Term>> parts;
  for (const auto& term : p.terms()) {
    std::vector<std::int32_t> key(term.exps.begin() + 1, term.exps.end());
    symcalc::Term t = term;
    for (std::size_t i = 1; i < t.exps.size(); ++i) t.exps[i] = 0;
    parts[key].push_back(std::move(t));
  }
  std::map<std::vector<std::int32_t>, MultiPoly> out;
  for (auto& [key, terms] : parts) {
    out[key] = MultiPoly::from_terms(std::move(terms), p.symbols());
  }
  return out;
}

const std::vector<std::string> kCoeffs = {"p0", "p1", "p2", "p3", "p4"};

// Affine form (c, a0..a4) of a polynomial of degree one in p0..p4 with
// constant coefficients, or nullopt.
std::optional<std::vector<Rational>> affine_form(const MultiPoly& p) {
  std::vector<Rational> v(kCoeffs.size() + 1, 0);
  for (const auto& term : p.terms()) {
    int degree = 0;
    std::size_t var = 0;
    for (std::size_t i = 0; i < term.exps.size(); ++i) {
      if (term.exps[i] == 0) continue;
      if (i == 0) return std::nullopt;
      auto it = std::find(kCoeffs.begin(), kCoeffs.end(), (*p.symbols())[i]);
      if (it == kCoeffs.end()) return std::nullopt;
      degree += term.exps[i];
      var = static_cast<std::size_t>(it - kCoeffs.begin()) + 1;
    }
    if (degree > 1) return std::nullopt;
    v[degree == 0 ? 0 : var] += term.coef;
  }
  return v;
}

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

GammaState naive_h(Label i, Label j) {
  GammaState h;
  h.omega = symcalc::parse_ratfun("p0");
  h.labels = {i, j};
  h.set(i, i, symcalc::parse_ratfun("p1"));
  h.set(i, j, symcalc::parse_ratfun("p2"));
  h.set(j, i, symcalc::parse_ratfun("p3"));
  h.set(j, j, symcalc::parse_ratfun("p4"));
  return h;
}

GammaState with_crossings(GammaState st, const std::string& text,
                          const std::vector<std::array<Label, 3>>& merges) {
  const tangle::Expr e = tangle::parse_syntax(text);
  for (const tangle::Node* a : tangle::atoms(e)) st = gamma::disjoint(st, gamma::gen(*a));
  for (const auto& [x, y, k] : merges) st = gamma::merge_state(st, x, y, k);
  return st;
}

GammaState merge_chain(GammaState st, const std::vector<Label>& chain, Label k) {
  st = gamma::merge_state(st, chain[0], chain[1], k);
  for (std::size_t i = 2; i < chain.size(); ++i) st = gamma::merge_state(st, k, chain[i], k);
  return st;
}

// Substitutes the bindings whose symbols f uses.
RatFun substitute_used(const RatFun& f, const std::map<std::string, RatFun>& b) {
  std::map<std::string, RatFun> used;
  for (const auto& [name, v] : b) {
    if (f.symbols()->index_of(name)) used.emplace(name, v);
  }
  return symcalc::substitute(f, used);
}

GammaState substitute_state(const GammaState& st,
                            const std::map<std::string, RatFun>& b) {
  GammaState out;
  out.labels = st.labels;
  out.omega = substitute_used(st.omega, b);
  for (const auto& [ij, v] : st.entries) out.set(ij.first, ij.second, substitute_used(v, b));
  return out;
}

std::string state_text(const GammaState& st) {
  std::string out = "omega = " + symcalc::to_text(st.omega) + "\n";
  for (const auto& [ij, v] : st.entries) {
    out += "  A(" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
           ") = " + symcalc::to_text(v) + "\n";
  }
  return out;
}

}  // namespace

std::string_view engine_name(Engine e) {
  return e == Engine::kGamma ? "gamma" : "dgamma";
}

Engine parse_engine(std::string_view s) {
  if (s == "gamma") return Engine::kGamma;
  if (s == "dgamma") return Engine::kDGamma;
  throw std::invalid_argument("unknown engine '" + std::string(s) + "'");
}

std::string_view expectation_name(Expectation e) {
  switch (e) {
    case Expectation::kEqual:
      return "equal";
    case Expectation::kUnitRatio:
      return "unit-ratio";
    case Expectation::kDefect:
      return "defect";
  }
  return "";
}

MoveReport check_move(const MoveInstance& m, Engine engine) {
  MoveReport r;
  r.name = m.name;
  r.engine = engine;
  r.expected = m.expected;
  r.expected_exponent = m.unit_exponent;
  GammaState lhs, rhs;
  try {
    lhs = evaluate(engine, m.lhs);
    rhs = evaluate(engine, m.rhs);
  } catch (const Error& e) {
    r.error = e.what();
    return r;
  }
  if (lhs.labels != rhs.labels) {
    r.error = "the two sides have different live labels";
    return r;
  }
  r.equal = lhs == rhs;
  if (!rhs.omega.is_zero()) {
    r.omega_ratio = lhs.omega / rhs.omega;
    r.unit_exponent = unit_exponent_of(*r.omega_ratio);
  }
  std::set<std::pair<Label, Label>> keys;
  for (const auto& [ij, v] : lhs.entries) keys.insert(ij);
  for (const auto& [ij, v] : rhs.entries) keys.insert(ij);
  for (const auto& [i, j] : keys) {
    RatFun a = lhs.at(i, j), b = rhs.at(i, j);
    if (a != b) r.a_diff.push_back(EntryDiff{i, j, std::move(a), std::move(b)});
  }
  switch (m.expected) {
    case Expectation::kEqual:
      r.passed = r.equal;
      break;
    case Expectation::kUnitRatio:
      r.passed = r.a_diff.empty() && r.unit_exponent == m.unit_exponent;
      break;
    case Expectation::kDefect:
      r.passed = true;
      break;
  }
  return r;
}

std::vector<MoveInstance> builtin_moves(Engine engine) {
  std::vector<MoveInstance> out = classical(engine);
  if (engine == Engine::kDGamma) {
    for (auto& m : reidemeister4()) out.push_back(std::move(m));
    for (auto& m : pass_through()) out.push_back(std::move(m));
  }
  return out;
}

std::vector<MoveInstance> select_moves(Engine engine, std::string_view filter) {
  std::vector<MoveInstance> out;
  for (auto& m : builtin_moves(engine)) {
    if (std::string_view(m.name).substr(0, filter.size()) == filter) {
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<MoveReport> builtin_suite(Engine engine, std::string_view filter) {
  std::vector<MoveReport> out;
  for (const auto& m : select_moves(engine, filter)) out.push_back(check_move(m, engine));
  return out;
}

bool all_passed(const std::vector<MoveReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed) return false;
  }
  return true;
}

std::string reports_to_json(const std::vector<MoveReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["engine"] = engine_name(r.engine);
    j["expected"] = expectation_name(r.expected);
    if (r.expected == Expectation::kUnitRatio) j["expected_exponent"] = r.expected_exponent;
    j["passed"] = r.passed;
    j["equal"] = r.equal;
    j["omega_ratio"] = r.omega_ratio ? nlohmann::ordered_json(symcalc::to_text(*r.omega_ratio))
                                     : nlohmann::ordered_json(nullptr);
    j["unit_exponent"] = r.unit_exponent ? nlohmann::ordered_json(*r.unit_exponent)
                                         : nlohmann::ordered_json(nullptr);
    nlohmann::ordered_json diff = nlohmann::ordered_json::array();
    for (const auto& d : r.a_diff) {
      diff.push_back({{"row", d.row}, {"col", d.col},
                      {"lhs", symcalc::to_text(d.lhs)}, {"rhs", symcalc::to_text(d.rhs)}});
    }
    j["a_diff"] = diff;
    if (!r.error.empty()) j["error"] = r.error;
    arr.push_back(j);
  }
  nlohmann::ordered_json out;
  out["passed"] = all_passed(reports);
  out["moves"] = arr;
  return out.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<MoveReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += r.passed ? "PASS " : "FAIL ";
    out += r.name + " [" + std::string(engine_name(r.engine)) + ", " +
           std::string(expectation_name(r.expected)) + "]";
    if (!r.error.empty()) {
      out += " error: " + r.error + "\n";
      continue;
    }
    if (r.equal) {
      out += " equal\n";
      continue;
    }
    if (r.omega_ratio) out += " omega ratio " + symcalc::to_text(*r.omega_ratio);
    out += ", " + std::to_string(r.a_diff.size()) + " A entries differ\n";
    for (const auto& d : r.a_diff) {
      out += "    (" + std::to_string(d.row) + "," + std::to_string(d.col) + "): " +
             symcalc::to_text(d.lhs) + " vs " + symcalc::to_text(d.rhs) + "\n";
    }
  }
  return out;
}

NaiveReport naive_h_constraints() {
  NaiveReport rep;
  // Both R4 equations for the vertex on strands 1, 2.
  const std::vector<std::array<Label, 3>> left = {{3, 5, 3}, {1, 4, 1}, {6, 2, 2}};
  const std::vector<std::array<Label, 3>> right = {{3, 5, 3}, {4, 1, 1}, {2, 6, 2}};
  std::vector<RatFun> diffs;
  for (const char* xs : {"X[3,4] Xb[5,6]", "Xb[4,3] X[6,5]"}) {
    const GammaState l = with_crossings(naive_h(1, 2), xs, left);
    const GammaState r = with_crossings(naive_h(1, 2), xs, right);
    diffs.push_back(l.omega - r.omega);
    for (Label i : l.labels) {
      for (Label j : l.labels) diffs.push_back(l.at(i, j) - r.at(i, j));
    }
  }
  rep.linear = true;
  std::vector<std::vector<Rational>> cond_rows;
  for (const RatFun& d : diffs) {
    if (d.is_zero()) continue;
    const MultiPoly& num = d.num();
    MultiPoly g;
    for (const auto& [key, coef] : split_by_t(num)) g = symcalc::gcd(g, coef);
    MultiPoly c = symcalc::divide_exact(num, g);
    c = symcalc::integer_primitive(c.shifted_t(-c.min_degree(0)));
    if (std::find(rep.conditions.begin(), rep.conditions.end(), c) == rep.conditions.end()) {
      rep.conditions.push_back(c);
    }
    auto row = affine_form(c);
    if (row) {
      cond_rows.push_back(*row);
    } else {
      rep.linear = false;
    }
  }
  std::vector<std::vector<Rational>> exp_rows;
  for (const char* e : {"p2 + p1 - 1", "p3 + p1 - 1", "p4 - p1"}) {
    rep.expected.push_back(symcalc::parse_poly(e));
    exp_rows.push_back(*affine_form(rep.expected.back()));
  }
  if (rep.linear) {
    std::vector<std::vector<Rational>> both = cond_rows;
    both.insert(both.end(), exp_rows.begin(), exp_rows.end());
    const std::size_t rc = rank(cond_rows);
    rep.equivalent = rc == rank(exp_rows) && rc == rank(both);
  }

  const std::map<std::string, RatFun> rel = {
      {"p2", symcalc::parse_ratfun("1 - p1")},
      {"p3", symcalc::parse_ratfun("1 - p1")},
      {"p4", symcalc::parse_ratfun("p1")},
  };
  rep.pinched = substitute_state(gamma::merge_state(naive_h(1, 2), 1, 2, 3), rel);
  rep.pinched_trivial_matrix =
      rep.pinched.entries.size() == 1 && rep.pinched.at(3, 3).is_one();
  const GammaState pair = gamma::disjoint(naive_h(1, 2), naive_h(3, 4));
  rep.series = substitute_state(merge_chain(pair, {1, 3, 4, 2}, 5), rel);
  rep.parallel = substitute_state(merge_chain(pair, {1, 2, 3, 4}, 5), rel);
  rep.series_equals_parallel = rep.series == rep.parallel;
  return rep;
}

std::string naive_to_text(const NaiveReport& r) {
  std::string out = "conditions:\n";
  for (const auto& c : r.conditions) out += "  " + symcalc::to_text(c) + " = 0\n";
  out += "equivalent to p2 = 1 - p1, p3 = 1 - p1, p4 = p1: ";
  out += r.equivalent ? "yes\n" : "no\n";
  out += "pinched loop: " + state_text(r.pinched);
  out += "series: " + state_text(r.series);
  out += "parallel: " + state_text(r.parallel);
  out += "series == parallel: ";
  out += r.series_equals_parallel ? "yes\n" : "no\n";
  return out;
}

}  // namespace ctkit::verify
