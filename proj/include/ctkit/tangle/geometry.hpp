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

#ifndef CTKIT_TANGLE_GEOMETRY_HPP_
#define CTKIT_TANGLE_GEOMETRY_HPP_

#include <cstddef>
#include <vector>

#include "ctkit/tangle/expr.hpp"

namespace ctkit::tangle {

// One generator strand traversed by a final strand. `atom` indexes atoms(e);
// `role` is 0 for the first label of the atom (over strand, u slot) and 1 for
// the second (under strand, d slot). Plain strands have role 0.
struct Segment {
  std::size_t atom = 0;
  int role = 0;
};

// A final strand as the ordered list of generator strands it runs through.
struct StrandPath {
  Label label = 0;
  std::vector<Segment> segments;
};

// The traversal structure implied by the merges of a valid expression:
// one path per live label, sorted by label.
struct Geometry {
  std::vector<const Node*> atoms;
  std::vector<StrandPath> strands;
};

Geometry derive_geometry(const Expr& e);

struct PieceWrithe {
  std::size_t piece = 0;
  Label strand = 0;
  int writhe = 0;
};

// Writhe of every maximal strand piece between H-vertex passages. A crossing
// counts towards a piece when both of its passages lie in that piece.
// Pieces are numbered along the strands in label order.
std::vector<PieceWrithe> piece_writhes(const Expr& e);

// Rewrites e as atoms followed by one multi-merge per final strand, with
// fresh internal labels. Final labels are kept.
Expr chain_form(const Expr& e);

// chain_form with |w| curls of sign -sgn(w) inserted at the start of every
// piece of nonzero writhe w, so every piece has writhe 0.
Expr frame_zero(const Expr& e);

}  // namespace ctkit::tangle

#endif  // CTKIT_TANGLE_GEOMETRY_HPP_
