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

#ifndef CTKIT_GAMMA_STATE_HPP_
#define CTKIT_GAMMA_STATE_HPP_

#include <map>
#include <utility>
#include <vector>

#include "ctkit/symcalc/multipoly.hpp"
#include "ctkit/symcalc/ratfun.hpp"
#include "ctkit/tangle/expr.hpp"

namespace ctkit::gamma {

using symcalc::MultiPoly;
using symcalc::RatFun;
using tangle::Label;

// A pair (omega, A). A is stored sparsely; absent entries are zero.
struct GammaState {
  RatFun omega = RatFun::constant(1);
  std::vector<Label> labels;  // sorted
  std::map<std::pair<Label, Label>, RatFun> entries;

  RatFun at(Label i, Label j) const;
  void set(Label i, Label j, const RatFun& v);
  bool has_label(Label l) const;

  friend bool operator==(const GammaState& a, const GammaState& b);
  friend bool operator!=(const GammaState& a, const GammaState& b) {
    return !(a == b);
  }
};

// Field-level operations on states. These follow the defining formulas
// directly and serve small inputs and cross-checks; eval_* use the
// fraction-free engine below.
GammaState merge_state(const GammaState& st, Label e, Label s, Label k);
GammaState disjoint(const GammaState& a, const GammaState& b);

// The same state kept as omega = c * D and A = B / D with B polynomial.
// Merging uses exact division by the previous D, so intermediate values
// stay polynomial.
class FracFreeState {
 public:
  // A generator state: omega = 1, polynomial entries.
  FracFreeState(std::vector<Label> labels,
                const std::map<std::pair<Label, Label>, MultiPoly>& entries);

  const std::vector<Label>& labels() const { return labels_; }
  bool has_label(Label l) const;

  // Throws DegenerateMerge when A(e, s) = 1.
  void merge(Label e, Label s, Label k);
  static FracFreeState disjoint(const FracFreeState& a, const FracFreeState& b);

  RatFun omega() const;
  GammaState to_state() const;

 private:
  FracFreeState() = default;
  std::size_t index_of(Label l) const;
  MultiPoly& at(std::size_t r, std::size_t c) { return b_[r * n() + c]; }
  const MultiPoly& at(std::size_t r, std::size_t c) const {
    return b_[r * n() + c];
  }
  std::size_t n() const { return labels_.size(); }

  std::vector<Label> labels_;
  RatFun c_ = RatFun::constant(1);
  MultiPoly d_ = MultiPoly::constant(1);
  std::vector<MultiPoly> b_;  // row-major n x n
};

// Builds a generator state for an atom; doubled selects the ΔΓ rules.
using GeneratorFn = FracFreeState (*)(const tangle::Node& atom);

// Bottom-up evaluation keeping separate components until a merge joins
// them. When doubled is set every merge (e, s, k) is followed by
// (-e, -s, -k).
FracFreeState evaluate(const tangle::Expr& e, GeneratorFn gen, bool doubled);

}  // namespace ctkit::gamma

#endif  // CTKIT_GAMMA_STATE_HPP_
