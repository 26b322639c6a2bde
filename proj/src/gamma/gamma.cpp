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


#include "ctkit/gamma/gamma.hpp"

#include "ctkit/errors.hpp"

namespace ctkit::gamma {
namespace {

FracFreeState ff_gen(const tangle::Node& n) {
  using Entries = std::map<std::pair<Label, Label>, MultiPoly>;
  const MultiPoly one = MultiPoly::constant(1);
  switch (n.kind) {
    case tangle::NodeKind::kStrand:
      return FracFreeState({n.a}, Entries{{{n.a, n.a}, one}});
    case tangle::NodeKind::kCrossing: {
      const MultiPoly tp = MultiPoly::t_power(n.sign > 0 ? 1 : -1);
      const Label i = n.a, j = n.b;
      return FracFreeState(
          {i, j}, Entries{{{i, i}, one}, {{i, j}, one - tp}, {{j, j}, tp}});
    }
    default:
      throw UnsupportedGenerator("H-vertex " + n.name +
                                 " has no value in the Gamma calculus");
  }
}

}  // namespace

GammaState gen(const tangle::Node& atom) { return ff_gen(atom).to_state(); }

GammaState eval_gamma(const tangle::Expr& e) {
  return evaluate(e, &ff_gen, false).to_state();
}

RatFun eval_gamma_omega(const tangle::Expr& e) {
  return evaluate(e, &ff_gen, false).omega();
}

}  // namespace ctkit::gamma
