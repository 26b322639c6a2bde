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

#include "ctkit/tangle/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>

#include "ctkit/errors.hpp"

namespace ctkit::tangle {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expr parse() {
    std::vector<Expr> parts;
    skip();
    while (pos_ < s_.size() && s_[pos_] != '/') parts.push_back(atom());
    if (parts.empty()) fail("expected a generator");
    Expr e = Expr::disjoint(parts);
    while (pos_ < s_.size()) {
      expect('/');
      expect('/');
      e = merge(e);
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
    skip();
  }
  bool peek_word(std::string_view w) const {
    return s_.substr(pos_, w.size()) == w;
  }

  Label integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a label");
    if (pos_ - start > 12) {
      pos_ = start;
      fail("label too large");
    }
    const Label v = std::stol(std::string(s_.substr(start, pos_ - start)));
    skip();
    return v;
  }

  std::string name() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a vertex name");
    std::string n(s_.substr(start, pos_ - start));
    skip();
    return n;
  }

  Expr atom() {
    skip();
    Expr out;
    if (peek_word("Xb[")) {
      pos_ += 3;
      const Label a = integer();
      expect(',');
      const Label b = integer();
      expect(']');
      out = Expr::crossing(a, b, -1);
    } else if (peek_word("X[")) {
      pos_ += 2;
      const Label a = integer();
      expect(',');
      const Label b = integer();
      expect(']');
      out = Expr::crossing(a, b, 1);
    } else if (peek_word("S[")) {
      pos_ += 2;
      const Label a = integer();
      expect(']');
      out = Expr::strand(a);
    } else if (peek_word("H[")) {
      pos_ += 2;
      std::string n = name();
      expect(';');
      const Label a = integer();
      expect(',');
      const Label b = integer();
      expect(']');
      out = Expr::hvertex(std::move(n), a, b);
    } else {
      fail("expected a generator");
    }
    return out;
  }

  Expr merge(const Expr& child) {
    if (!peek_word("m[")) fail("expected 'm['");
    pos_ += 2;
    std::vector<Label> labels{integer()};
    while (pos_ < s_.size() && s_[pos_] == ',') {
      ++pos_;
      labels.push_back(integer());
    }
    if (labels.size() < 2) fail("a merge needs at least two labels");
    expect('>');
    const Label k = integer();
    expect(']');
    return Expr::merge_all(child, labels, k);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string atom_text(const Node& n) {
  switch (n.kind) {
    case NodeKind::kStrand:
      return "S[" + std::to_string(n.a) + "]";
    case NodeKind::kCrossing:
      return std::string(n.sign > 0 ? "X[" : "Xb[") + std::to_string(n.a) + "," +
             std::to_string(n.b) + "]";
    case NodeKind::kHVertex:
      return "H[" + n.name + "; " + std::to_string(n.a) + "," +
             std::to_string(n.b) + "]";
    default:
      return "";
  }
}

bool valid_name(const std::string& n) {
  return !n.empty() && std::all_of(n.begin(), n.end(), [](char c) {
           return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
         });
}

struct Validator {
  ValidationReport report;
  std::set<std::string> names;

  void add(Violation::Kind kind, std::string msg) {
    report.violations.push_back(Violation{kind, std::move(msg)});
  }
  void check_label(Label l) {
    if (l <= 0) add(Violation::kBadLabel, "label " + std::to_string(l) + " is not positive");
  }

  std::set<Label> walk(const Node* n) {
    std::set<Label> live;
    switch (n->kind) {
      case NodeKind::kStrand:
        check_label(n->a);
        live.insert(n->a);
        break;
      case NodeKind::kCrossing:
        check_label(n->a);
        check_label(n->b);
        if (n->sign != 1 && n->sign != -1) {
          add(Violation::kBadSign, "crossing sign must be +1 or -1");
        }
        if (n->a == n->b) {
          add(Violation::kDuplicateLabel,
              "label " + std::to_string(n->a) + " is used twice");
        }
        live = {n->a, n->b};
        break;
      case NodeKind::kHVertex:
        check_label(n->a);
        check_label(n->b);
        if (!valid_name(n->name)) {
          add(Violation::kDuplicateVertex, "invalid vertex name '" + n->name + "'");
        } else if (!names.insert(n->name).second) {
          add(Violation::kDuplicateVertex, "vertex name '" + n->name + "' is used twice");
        }
        report.vertex_names.push_back(n->name);
        if (n->a == n->b) {
          add(Violation::kDuplicateLabel,
              "label " + std::to_string(n->a) + " is used twice");
        }
        live = {n->a, n->b};
        break;
      case NodeKind::kUnion: {
        live = walk(n->left.get());
        for (Label l : walk(n->right.get())) {
          if (!live.insert(l).second) {
            add(Violation::kDuplicateLabel,
                "label " + std::to_string(l) + " is used twice");
          }
        }
        break;
      }
      case NodeKind::kMerge: {
        live = walk(n->left.get());
        const std::string where = "merge m[" + std::to_string(n->e) + "," +
                                  std::to_string(n->s) + ">" +
                                  std::to_string(n->k) + "]";
        check_label(n->k);
        if (n->e == n->s) {
          add(Violation::kSelfMerge, where + " joins a strand to itself");
        }
        for (Label l : {n->e, n->s}) {
          if (!live.count(l)) {
            add(Violation::kDeadLabel, where + ": label " + std::to_string(l) + " is not live");
          }
        }
        live.erase(n->e);
        live.erase(n->s);
        if (!live.insert(n->k).second) {
          add(Violation::kResultClash,
              where + ": result label " + std::to_string(n->k) + " is already live");
        }
        break;
      }
    }
    return live;
  }
};

}  // namespace

Expr parse_syntax(std::string_view text) { return Parser(text).parse(); }

Expr parse_expr(std::string_view text) {
  Expr e = parse_syntax(text);
  require_valid(e);
  return e;
}

ValidationReport validate(const Expr& e) {
  Validator v;
  if (e.empty()) {
    v.add(Violation::kBadLabel, "empty expression");
    return v.report;
  }
  std::set<Label> live = v.walk(e.ptr().get());
  v.report.live_labels.assign(live.begin(), live.end());
  v.report.strand_count = live.size();
  return v.report;
}

void require_valid(const Expr& e) {
  ValidationReport r = validate(e);
  for (const auto& v : r.violations) {
    if (v.kind == Violation::kDuplicateLabel) throw LabelClash(v.message);
  }
  if (!r.ok()) throw LabelError(r.violations.front().message);
}

std::string to_dsl(const Expr& e) {
  const auto as = atoms(e);
  const auto ms = merges(e);
  std::string out;
  for (const Node* a : as) {
    if (!out.empty()) out += ' ';
    out += atom_text(*a);
  }
  // Group merges into multi-merges.
  std::vector<std::pair<std::vector<Label>, Label>> groups;
  for (const Node* m : ms) {
    if (!groups.empty() && m->e == groups.back().second &&
        m->k == groups.back().second) {
      groups.back().first.push_back(m->s);
    } else {
      groups.push_back({{m->e, m->s}, m->k});
    }
  }
  for (const auto& [labels, k] : groups) {
    out += " // m[";
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(labels[i]);
    }
    out += " > " + std::to_string(k) + "]";
  }
  // A valid tree must stay valid when flattened.
  if (validate(e).ok() && !validate(parse_syntax(out)).ok()) {
    throw LabelError("expression cannot be written as a flat atom list");
  }
  return out;
}

}  // namespace ctkit::tangle
