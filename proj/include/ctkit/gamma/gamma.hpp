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


#ifndef CTKIT_GAMMA_GAMMA_HPP_
#define CTKIT_GAMMA_GAMMA_HPP_

#include "ctkit/gamma/state.hpp"
#include "ctkit/tangle/expr.hpp"

namespace ctkit::gamma {

// Value of a strand or crossing. Throws UnsupportedGenerator for H-vertices.
GammaState gen(const tangle::Node& atom);

GammaState eval_gamma(const tangle::Expr& e);
// Only the omega part; skips building the rational A entries.
RatFun eval_gamma_omega(const tangle::Expr& e);

}  // namespace ctkit::gamma

#endif  // CTKIT_GAMMA_GAMMA_HPP_
