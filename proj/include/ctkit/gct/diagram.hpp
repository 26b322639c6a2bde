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


#ifndef CTKIT_GCT_DIAGRAM_HPP_
#define CTKIT_GCT_DIAGRAM_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ctkit/tangle/expr.hpp"

namespace ctkit::gct {

// A contact between chain sites a < b; sigma is 0 for a hard contact and
// +1 / -1 for a positive / negative clasp.
struct Contact {
  int a = 0;
  int b = 0;
  int sigma = 0;
  friend bool operator==(const Contact& x, const Contact& y) {
    return x.a == y.a && x.b == y.b && x.sigma == y.sigma;
  }
};

// Contacts sorted by first endpoint; endpoints are exactly 1..2n.
struct Diagram {
  std::vector<Contact> contacts;
  std::size_t size() const { return contacts.size(); }
  friend bool operator==(const Diagram& x, const Diagram& y) {
    return x.contacts == y.contacts;
  }
};

// Sorts the contacts and checks the endpoint partition. Throws
// InvalidDiagram.
Diagram make_diagram(std::vector<Contact> contacts);

// Accepts "{1,4}+ {2,7}- {3,5}0", the subscript form
// "{{1,4}_1,{2,7}_{-1},{3,5}_0}" and JSON [{"a":1,"b":4,"s":1}, ...].
// Throws InvalidDiagram.
Diagram parse_gct(std::string_view text);

// "{1,4}+ {2,7}- {3,5}0".
std::string print(const Diagram& d);
std::string to_json(const Diagram& d);

enum class Relation { kSeries, kParallel, kCross };
char relation_char(Relation r);

// Throws InvalidPair when the contacts share an endpoint.
Relation relation(const Contact& p, const Contact& q);

// Symmetric n x n matrix; diagonal entries are '0', others 'S', 'P', 'X'.
std::vector<std::string> relation_matrix(const Diagram& d);

struct CompileOptions {
  // Insert compensating curls so every strand piece has writhe 0.
  bool frame_zero = true;
};

// Single-strand H-tangle expression of the diagram. Hard contacts become
// H-vertices named 1, 2, ... in order of first endpoint.
tangle::Expr compile(const Diagram& d, const CompileOptions& opts = {});

// Adds a clasp of sign sigma linking contacts i and j (indices into
// d.contacts), which must be in series. The new contact starts right after
// the earlier contact and ends right after the later one. Throws NotSeries.
Diagram insert_clasp(const Diagram& d, std::size_t i, std::size_t j, int sigma);

// True when some clasp joins adjacent sites {i, i+1}.
bool has_loose_clasp(const Diagram& d);

// All perfect matchings of 1..2n with all sign assignments, in
// lexicographic order of (matching, signs).
std::vector<Diagram> enumerate(int n, bool drop_loose_clasps = false);

// (2n-1)!! * 3^n.
std::uint64_t enumerate_count(int n);

Diagram random_diagram(int n, std::uint64_t seed);

}  // namespace ctkit::gct

#endif  // CTKIT_GCT_DIAGRAM_HPP_
