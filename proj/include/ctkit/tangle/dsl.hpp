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

#ifndef CTKIT_TANGLE_DSL_HPP_
#define CTKIT_TANGLE_DSL_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "ctkit/tangle/expr.hpp"

namespace ctkit::tangle {

// Text grammar:
//   expr  ::= atom+ ('//' merge)*
//   atom  ::= 'S[' int ']' | 'X[' int ',' int ']' | 'Xb[' int ',' int ']'
//           | 'H[' name ';' int ',' int ']'
//   merge ::= 'm[' int (',' int)+ '>' int ']'
// Juxtaposed atoms form a disjoint union; merges apply left to right.

// Parses without checking label discipline. Throws ParseError.
Expr parse_syntax(std::string_view text);

// Parses and validates. Throws ParseError, LabelClash or LabelError.
Expr parse_expr(std::string_view text);

// Canonical text: atoms in order, then merges with consecutive merges into
// the same result label collapsed into one multi-merge. Throws LabelError if
// the tree cannot be written as a flat atom list (an atom label reused after
// an inner merge consumed it).
std::string to_dsl(const Expr& e);

struct Violation {
  enum Kind {
    kDuplicateLabel,
    kDeadLabel,
    kSelfMerge,
    kResultClash,
    kDuplicateVertex,
    kBadLabel,
    kBadSign,
  };
  Kind kind;
  std::string message;
};

struct ValidationReport {
  std::vector<Label> live_labels;  // sorted
  std::vector<std::string> vertex_names;  // in atom order
  std::size_t strand_count = 0;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Expr& e);

// Throws LabelClash for duplicate labels, LabelError for any other violation.
void require_valid(const Expr& e);

}  // namespace ctkit::tangle

#endif  // CTKIT_TANGLE_DSL_HPP_
