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

#ifndef CTKIT_SYMCALC_FORMAT_HPP_
#define CTKIT_SYMCALC_FORMAT_HPP_

#include <string>
#include <string_view>

#include "ctkit/symcalc/multipoly.hpp"
#include "ctkit/symcalc/ratfun.hpp"

namespace ctkit::symcalc {

// Canonical text: "t^4 - t^2 + 1", "-2*h1*t^5 + 1/2*h2". Terms appear in
// descending powers of t, h-monomials lexicographically within a power.
std::string to_text(const MultiPoly& p);
// "(num)/(den)" when the denominator is not 1.
std::string to_text(const RatFun& f);

// LaTeX with the same term order, e.g. "h_1 t^6-2 h_1 t^5+t^{-1}".
std::string to_latex(const MultiPoly& p);
std::string to_latex(const RatFun& f);

// Parses sums, products, integer powers, parentheses and '/' over integer
// literals and identifiers. Every identifier becomes a symbol.
RatFun parse_ratfun(std::string_view text);
// As parse_ratfun, but the value must be a Laurent polynomial.
MultiPoly parse_poly(std::string_view text);

}  // namespace ctkit::symcalc

#endif  // CTKIT_SYMCALC_FORMAT_HPP_
