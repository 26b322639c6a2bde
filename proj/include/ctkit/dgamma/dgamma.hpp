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


#ifndef CTKIT_DGAMMA_DGAMMA_HPP_
#define CTKIT_DGAMMA_DGAMMA_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctkit/gamma/state.hpp"
#include "ctkit/symcalc/ratfun.hpp"
#include "ctkit/tangle/expr.hpp"
#include "ctkit/tangle/geometry.hpp"

namespace ctkit::dgamma {

using gamma::GammaState;
using symcalc::RatFun;
using tangle::Label;

// States are GammaState values over the signed labels ±i.
GammaState dgen(const tangle::Node& atom);
// Merges (e, s) into k and then (-e, -s) into -k.
GammaState dmerge(const GammaState& st, Label e, Label s, Label k);

GammaState eval_dgamma(const tangle::Expr& e);
RatFun eval_dgamma_omega(const tangle::Expr& e);

struct ReportOptions {
  bool with_matrix = false;
  // Rewrites the expression so every strand piece has writhe 0 first.
  bool frame_zero = false;
};

struct InvariantReport {
  symcalc::LaurentNormal dgamma1;
  std::optional<GammaState> a_part;
  std::string source;
  // Vertex name -> index i of the symbol h<i> used in the report.
  std::map<std::string, int> h_labeling;
  std::vector<tangle::PieceWrithe> piece_writhes;
  std::vector<std::string> warnings;
};

// Vertex names in order of first passage along the strands (strands taken
// in label order).
std::vector<std::string> chain_order(const tangle::Expr& e);

InvariantReport dgamma1(const tangle::Expr& e, const ReportOptions& opts = {});

}  // namespace ctkit::dgamma

#endif  // CTKIT_DGAMMA_DGAMMA_HPP_
