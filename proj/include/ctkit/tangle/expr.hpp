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

#ifndef CTKIT_TANGLE_EXPR_HPP_
#define CTKIT_TANGLE_EXPR_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ctkit::tangle {

// Strand labels. User labels are positive; the negation -i of a label is
// reserved for the doubled strand in the ΔΓ engine.
using Label = long;

enum class NodeKind { kStrand, kCrossing, kHVertex, kUnion, kMerge };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// One node of a tangle expression tree.
//   kStrand:   a = label.
//   kCrossing: a = over strand, b = under strand, sign = +1 or -1.
//   kHVertex:  name, a = u strand, b = d strand.
//   kUnion:    left, right.
//   kMerge:    left = child; end of strand e joined to start of strand s,
//              result labelled k.
struct Node {
  NodeKind kind = NodeKind::kStrand;
  Label a = 0;
  Label b = 0;
  int sign = 0;
  std::string name;
  NodePtr left;
  NodePtr right;
  Label e = 0;
  Label s = 0;
  Label k = 0;
};

// Immutable handle to an expression tree.
class Expr {
 public:
  Expr() = default;
  explicit Expr(NodePtr root) : root_(std::move(root)) {}

  static Expr strand(Label i);
  static Expr crossing(Label over, Label under, int sign);
  static Expr hvertex(std::string name, Label u, Label d);
  static Expr disjoint(const Expr& left, const Expr& right);
  // Disjoint union of all parts, left to right.
  static Expr disjoint(const std::vector<Expr>& parts);
  static Expr merge(const Expr& child, Label e, Label s, Label k);
  // Multi-merge m[l1,l2,...,ln > k]: merge l1 with l2 into k, then k with
  // l3 into k, and so on.
  static Expr merge_all(const Expr& child, const std::vector<Label>& labels,
                        Label k);

  const Node& root() const { return *root_; }
  const NodePtr& ptr() const { return root_; }
  bool empty() const { return root_ == nullptr; }

 private:
  NodePtr root_;
};

// Atoms (generator leaves) in left-to-right order.
std::vector<const Node*> atoms(const Expr& e);
// Merge nodes in evaluation order (children before parents, left first).
std::vector<const Node*> merges(const Expr& e);

// Symbol used for the vertex variable of H-vertex `name`.
std::string vertex_symbol(std::string_view name);

}  // namespace ctkit::tangle

#endif  // CTKIT_TANGLE_EXPR_HPP_
