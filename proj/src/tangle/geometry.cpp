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

#include "ctkit/tangle/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <unordered_map>

#include "ctkit/tangle/dsl.hpp"

namespace ctkit::tangle {
namespace {

using PathMap = std::map<Label, std::vector<Segment>>;

struct Walker {
  std::unordered_map<const Node*, std::size_t> atom_index;

  PathMap walk(const Node* n) {
    PathMap out;
    switch (n->kind) {
      case NodeKind::kStrand:
        out[n->a] = {Segment{atom_index.at(n), 0}};
        break;
      case NodeKind::kCrossing:
      case NodeKind::kHVertex:
        out[n->a] = {Segment{atom_index.at(n), 0}};
        out[n->b] = {Segment{atom_index.at(n), 1}};
        break;
      case NodeKind::kUnion:
        out = walk(n->left.get());
        out.merge(walk(n->right.get()));
        break;
      case NodeKind::kMerge: {
        out = walk(n->left.get());
        std::vector<Segment> joined = std::move(out.at(n->e));
        std::vector<Segment>& tail = out.at(n->s);
        joined.insert(joined.end(), tail.begin(), tail.end());
        out.erase(n->e);
        out.erase(n->s);
        out[n->k] = std::move(joined);
        break;
      }
    }
    return out;
  }
};

// Piece index of every segment along a path; a new piece starts after each
// H-vertex passage.
std::vector<std::size_t> piece_of(const Geometry& g, const StrandPath& p,
                                  std::size_t& next_piece) {
  std::vector<std::size_t> out;
  out.reserve(p.segments.size());
  std::size_t piece = next_piece++;
  for (const Segment& s : p.segments) {
    out.push_back(piece);
    if (g.atoms[s.atom]->kind == NodeKind::kHVertex) piece = next_piece++;
  }
  return out;
}

struct PieceInfo {
  std::vector<PieceWrithe> writhes;
  // For each strand, the piece of each segment.
  std::vector<std::vector<std::size_t>> pieces;
};

PieceInfo compute_pieces(const Geometry& g) {
  PieceInfo info;
  std::size_t next = 0;
  std::vector<std::size_t> first_piece;
  for (const auto& p : g.strands) {
    first_piece.push_back(next);
    info.pieces.push_back(piece_of(g, p, next));
  }
  info.writhes.resize(next);
  for (std::size_t si = 0; si < g.strands.size(); ++si) {
    const std::size_t last =
        si + 1 < g.strands.size() ? first_piece[si + 1] : next;
    for (std::size_t pc = first_piece[si]; pc < last; ++pc) {
      info.writhes[pc] = PieceWrithe{pc, g.strands[si].label, 0};
    }
  }
  // Piece of each crossing passage, keyed by atom and role.
  std::map<std::pair<std::size_t, int>, std::size_t> where;
  for (std::size_t si = 0; si < g.strands.size(); ++si) {
    const auto& segs = g.strands[si].segments;
    for (std::size_t j = 0; j < segs.size(); ++j) {
      where[{segs[j].atom, segs[j].role}] = info.pieces[si][j];
    }
  }
  for (std::size_t a = 0; a < g.atoms.size(); ++a) {
    if (g.atoms[a]->kind != NodeKind::kCrossing) continue;
    const std::size_t p0 = where.at({a, 0}), p1 = where.at({a, 1});
    if (p0 == p1) info.writhes[p0].writhe += g.atoms[a]->sign;
  }
  return info;
}

Expr rebuild(const Geometry& g, const std::vector<std::vector<int>>& curls) {
  Label next = 1;
  for (const Node* a : g.atoms) next = std::max({next, a->a + 1, a->b + 1});
  for (const auto& p : g.strands) next = std::max(next, p.label + 1);

  // New label for each generator strand.
  std::map<std::pair<std::size_t, int>, Label> fresh;
  std::vector<Expr> parts;
  std::vector<std::vector<Label>> chains(g.strands.size());
  for (std::size_t si = 0; si < g.strands.size(); ++si) {
    const auto& segs = g.strands[si].segments;
    std::size_t count = segs.size();
    for (int c : curls[si]) count += 2 * static_cast<std::size_t>(std::abs(c));
    for (std::size_t j = 0; j < segs.size(); ++j) {
      fresh[{segs[j].atom, segs[j].role}] =
          count == 1 ? g.strands[si].label : next++;
    }
  }
  for (std::size_t a = 0; a < g.atoms.size(); ++a) {
    const Node* n = g.atoms[a];
    switch (n->kind) {
      case NodeKind::kStrand:
        parts.push_back(Expr::strand(fresh.at({a, 0})));
        break;
      case NodeKind::kCrossing:
        parts.push_back(Expr::crossing(fresh.at({a, 0}), fresh.at({a, 1}), n->sign));
        break;
      case NodeKind::kHVertex:
        parts.push_back(Expr::hvertex(n->name, fresh.at({a, 0}), fresh.at({a, 1})));
        break;
      default:
        break;
    }
  }
  for (std::size_t si = 0; si < g.strands.size(); ++si) {
    const auto& segs = g.strands[si].segments;
    std::size_t piece = 0;
    auto add_curls = [&](std::size_t pc) {
      const int w = curls[si][pc];
      for (int i = 0; i < std::abs(w); ++i) {
        const Label l1 = next++, l2 = next++;
        parts.push_back(Expr::crossing(l1, l2, w > 0 ? 1 : -1));
        chains[si].push_back(l1);
        chains[si].push_back(l2);
      }
    };
    add_curls(piece);
    for (const Segment& s : segs) {
      chains[si].push_back(fresh.at({s.atom, s.role}));
      if (g.atoms[s.atom]->kind == NodeKind::kHVertex) add_curls(++piece);
    }
  }
  Expr out = Expr::disjoint(parts);
  for (std::size_t si = 0; si < g.strands.size(); ++si) {
    if (chains[si].size() > 1) {
      out = Expr::merge_all(out, chains[si], g.strands[si].label);
    }
  }
  return out;
}

}  // namespace

Geometry derive_geometry(const Expr& e) {
  require_valid(e);
  Geometry g;
  g.atoms = atoms(e);
  Walker w;
  for (std::size_t i = 0; i < g.atoms.size(); ++i) w.atom_index[g.atoms[i]] = i;
  for (auto& [label, segs] : w.walk(e.ptr().get())) {
    g.strands.push_back(StrandPath{label, std::move(segs)});
  }
  return g;
}

std::vector<PieceWrithe> piece_writhes(const Expr& e) {
  return compute_pieces(derive_geometry(e)).writhes;
}

Expr chain_form(const Expr& e) {
  Geometry g = derive_geometry(e);
  std::vector<std::vector<int>> curls(g.strands.size());
  for (std::size_t si = 0; si < g.strands.size(); ++si) {
    std::size_t pieces = 1;
    for (const Segment& s : g.strands[si].segments) {
      if (g.atoms[s.atom]->kind == NodeKind::kHVertex) ++pieces;
    }
    curls[si].assign(pieces, 0);
  }
  return rebuild(g, curls);
}

Expr frame_zero(const Expr& e) {
  Geometry g = derive_geometry(e);
  PieceInfo info = compute_pieces(g);
  std::vector<std::vector<int>> curls(g.strands.size());
  std::size_t pc = 0;
  for (std::size_t si = 0; si < g.strands.size(); ++si) {
    std::size_t pieces = 1;
    for (const Segment& s : g.strands[si].segments) {
      if (g.atoms[s.atom]->kind == NodeKind::kHVertex) ++pieces;
    }
    for (std::size_t j = 0; j < pieces; ++j) {
      curls[si].push_back(-info.writhes[pc++].writhe);
    }
  }
  return rebuild(g, curls);
}

}  // namespace ctkit::tangle
