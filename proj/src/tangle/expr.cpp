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

#include "ctkit/tangle/expr.hpp"

#include <utility>

#include "ctkit/errors.hpp"

namespace ctkit::tangle {

Expr Expr::strand(Label i) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::kStrand;
  n->a = i;
  return Expr(std::move(n));
}

Expr Expr::crossing(Label over, Label under, int sign) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::kCrossing;
  n->a = over;
  n->b = under;
  n->sign = sign;
  return Expr(std::move(n));
}

Expr Expr::hvertex(std::string name, Label u, Label d) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::kHVertex;
  n->name = std::move(name);
  n->a = u;
  n->b = d;
  return Expr(std::move(n));
}

Expr Expr::disjoint(const Expr& left, const Expr& right) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::kUnion;
  n->left = left.ptr();
  n->right = right.ptr();
  return Expr(std::move(n));
}

Expr Expr::disjoint(const std::vector<Expr>& parts) {
  if (parts.empty()) throw LabelError("empty disjoint union");
  Expr out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = disjoint(out, parts[i]);
  return out;
}

Expr Expr::merge(const Expr& child, Label e, Label s, Label k) {
  auto n = std::make_shared<Node>();
  n->kind = NodeKind::kMerge;
  n->left = child.ptr();
  n->e = e;
  n->s = s;
  n->k = k;
  return Expr(std::move(n));
}

Expr Expr::merge_all(const Expr& child, const std::vector<Label>& labels,
                     Label k) {
  if (labels.size() < 2) throw LabelError("a merge needs at least two labels");
  Expr out = merge(child, labels[0], labels[1], k);
  for (std::size_t i = 2; i < labels.size(); ++i) {
    out = merge(out, k, labels[i], k);
  }
  return out;
}

namespace {

void collect_atoms(const Node* n, std::vector<const Node*>& out) {
  switch (n->kind) {
    case NodeKind::kUnion:
      collect_atoms(n->left.get(), out);
      collect_atoms(n->right.get(), out);
      break;
    case NodeKind::kMerge:
      collect_atoms(n->left.get(), out);
      break;
    default:
      out.push_back(n);
  }
}

void collect_merges(const Node* n, std::vector<const Node*>& out) {
  switch (n->kind) {
    case NodeKind::kUnion:
      collect_merges(n->left.get(), out);
      collect_merges(n->right.get(), out);
      break;
    case NodeKind::kMerge:
      collect_merges(n->left.get(), out);
      out.push_back(n);
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<const Node*> atoms(const Expr& e) {
  std::vector<const Node*> out;
  if (!e.empty()) collect_atoms(e.ptr().get(), out);
  return out;
}

std::vector<const Node*> merges(const Expr& e) {
  std::vector<const Node*> out;
  if (!e.empty()) collect_merges(e.ptr().get(), out);
  return out;
}

std::string vertex_symbol(std::string_view name) {
  return "h" + std::string(name);
}

}  // namespace ctkit::tangle
