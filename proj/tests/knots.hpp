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


// Test-only knot data: planar diagram codes, their long-knot DSL form and
// an Alexander polynomial oracle from the Wirtinger presentation.

#ifndef CTKIT_TESTS_KNOTS_HPP_
#define CTKIT_TESTS_KNOTS_HPP_

#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "ctkit/symcalc/multipoly.hpp"
#include "ctkit/symcalc/ratfun.hpp"

namespace ctkit::testing {

// X[i,j,k,l]: edges counterclockwise from the incoming under edge.
using PdCrossing = std::array<int, 4>;
using Pd = std::vector<PdCrossing>;

inline const Pd kTrefoilPd = {{1, 5, 2, 4}, {3, 1, 4, 6}, {5, 3, 6, 2}};
inline const Pd kFigureEightPd = {{4, 2, 5, 1}, {8, 6, 1, 5}, {6, 3, 7, 4}, {2, 7, 3, 8}};
inline const Pd kCinquefoilPd = {
    {1, 6, 2, 7}, {3, 8, 4, 9}, {5, 10, 6, 1}, {7, 2, 8, 3}, {9, 4, 10, 5}};

inline int pd_edges(const Pd& pd) { return static_cast<int>(2 * pd.size()); }

// Over strand runs l -> j for a positive crossing, j -> l for a negative one.
inline bool pd_positive(const PdCrossing& x, int n) {
  return x[3] % n + 1 == x[1];
}

// Long knot cut open before edge 1: each passage is labelled by its
// incoming edge and the strand is one multi-merge over 1..n.
inline std::string pd_to_dsl(const Pd& pd) {
  const int n = pd_edges(pd);
  std::string out;
  for (const auto& x : pd) {
    const bool pos = pd_positive(x, n);
    const int over_in = pos ? x[3] : x[1];
    out += std::string(pos ? "X[" : "Xb[") + std::to_string(over_in) + "," +
           std::to_string(x[0]) + "] ";
  }
  out += "// m[";
  for (int e = 1; e <= n; ++e) out += std::to_string(e) + (e < n ? "," : "");
  return out + " > " + std::to_string(n + 1) + "]";
}

// Determinant of the Wirtinger matrix with one row and column removed.
inline symcalc::RatFun alexander_oracle(const Pd& pd) {
  using symcalc::MultiPoly;
  using symcalc::RatFun;
  const int n = pd_edges(pd);
  // Arcs: edge e continues into e+1 unless e ends at an under passage.
  std::vector<int> arc(n + 1);
  std::vector<bool> breaks(n + 1, false);
  for (const auto& x : pd) breaks[x[0]] = true;
  int a = 0;
  for (int e = 1; e <= n; ++e) {
    arc[e] = a;
    if (breaks[e]) a = (a + 1) % static_cast<int>(pd.size());
  }
  // Edges after the last break belong to the first arc.
  for (int e = n; e >= 1 && !breaks[e]; --e) arc[e] = 0;

  const RatFun t(MultiPoly::t_power(1));
  const RatFun one = RatFun::constant(1);
  const std::size_t m = pd.size();
  std::vector<std::vector<RatFun>> mat(m, std::vector<RatFun>(m));
  for (std::size_t r = 0; r < m; ++r) {
    const auto& x = pd[r];
    const int over = arc[x[1]], in = arc[x[0]], out = arc[x[2]];
    if (pd_positive(x, n)) {
      mat[r][over] += one - t;
      mat[r][in] += t;
      mat[r][out] -= one;
    } else {
      mat[r][over] += t - one;
      mat[r][in] += one;
      mat[r][out] -= t;
    }
  }
  // Drop the last row and column, then eliminate.
  const std::size_t k = m - 1;
  RatFun det = one;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (p < k && mat[p][c].is_zero()) ++p;
    if (p == k) return RatFun();
    if (p != c) {
      std::swap(mat[p], mat[c]);
      det = -det;
    }
    det *= mat[c][c];
    for (std::size_t r = c + 1; r < k; ++r) {
      if (mat[r][c].is_zero()) continue;
      const RatFun f = mat[r][c] / mat[c][c];
      for (std::size_t j = c; j < k; ++j) mat[r][j] -= f * mat[c][j];
    }
  }
  return det;
}

}  // namespace ctkit::testing

#endif  // CTKIT_TESTS_KNOTS_HPP_
