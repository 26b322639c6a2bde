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

#include "ctkit/gamma/state.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "ctkit/errors.hpp"
#include "ctkit/tangle/dsl.hpp"

namespace ctkit::gamma {
namespace {

Label relabel(Label x, Label from, Label to) { return x == from ? to : x; }

void require_live(const std::vector<Label>& labels, Label l) {
  if (!std::binary_search(labels.begin(), labels.end(), l)) {
    throw LabelError("label " + std::to_string(l) + " is not live");
  }
}

}  // namespace

RatFun GammaState::at(Label i, Label j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? RatFun() : it->second;
}

void GammaState::set(Label i, Label j, const RatFun& v) {
  if (v.is_zero()) {
    entries.erase({i, j});
  } else {
    entries[{i, j}] = v;
  }
}

bool GammaState::has_label(Label l) const {
  return std::binary_search(labels.begin(), labels.end(), l);
}

bool operator==(const GammaState& a, const GammaState& b) {
  if (a.labels != b.labels || a.omega != b.omega) return false;
  if (a.entries.size() != b.entries.size()) return false;
  auto ia = a.entries.begin();
  for (auto ib = b.entries.begin(); ib != b.entries.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second != ib->second) return false;
  }
  return true;
}

GammaState merge_state(const GammaState& st, Label e, Label s, Label k) {
  require_live(st.labels, e);
  require_live(st.labels, s);
  if (e == s) throw LabelError("cannot merge a strand with itself");
  if (k != e && k != s && st.has_label(k)) {
    throw LabelError("result label " + std::to_string(k) + " is already live");
  }
  const RatFun one_minus = RatFun::constant(1) - st.at(e, s);
  if (one_minus.is_zero()) throw DegenerateMerge(e, s);

  GammaState out;
  out.omega = one_minus * st.omega;
  for (Label l : st.labels) {
    if (l != e && l != s) out.labels.push_back(l);
  }
  out.labels.push_back(k);
  std::sort(out.labels.begin(), out.labels.end());

  std::map<Label, RatFun> col_s, row_e;
  for (const auto& [ij, v] : st.entries) {
    if (ij.second == s && ij.first != e) col_s[ij.first] = v;
    if (ij.first == e && ij.second != s) row_e[ij.second] = v / one_minus;
  }
  for (const auto& [ij, v] : st.entries) {
    if (ij.first == e || ij.second == s) continue;
    out.set(relabel(ij.first, s, k), relabel(ij.second, e, k), v);
  }
  for (const auto& [i, vi] : col_s) {
    for (const auto& [j, vj] : row_e) {
      const Label ri = relabel(i, s, k), cj = relabel(j, e, k);
      out.set(ri, cj, out.at(ri, cj) + vi * vj);
    }
  }
  return out;
}

GammaState disjoint(const GammaState& a, const GammaState& b) {
  GammaState out;
  std::set_union(a.labels.begin(), a.labels.end(), b.labels.begin(),
                 b.labels.end(), std::back_inserter(out.labels));
  if (out.labels.size() != a.labels.size() + b.labels.size()) {
    throw LabelClash("disjoint union of states with a shared label");
  }
  out.omega = a.omega * b.omega;
  out.entries = a.entries;
  out.entries.insert(b.entries.begin(), b.entries.end());
  return out;
}

FracFreeState::FracFreeState(
    std::vector<Label> labels,
    const std::map<std::pair<Label, Label>, MultiPoly>& entries)
    : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  b_.assign(n() * n(), MultiPoly());
  for (const auto& [ij, v] : entries) {
    at(index_of(ij.first), index_of(ij.second)) = v;
  }
}

bool FracFreeState::has_label(Label l) const {
  return std::binary_search(labels_.begin(), labels_.end(), l);
}

std::size_t FracFreeState::index_of(Label l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) {
    throw LabelError("label " + std::to_string(l) + " is not live");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

void FracFreeState::merge(Label e, Label s, Label k) {
  const std::size_t ie = index_of(e), is = index_of(s);
  if (e == s) throw LabelError("cannot merge a strand with itself");
  MultiPoly d_new = d_ - at(ie, is);
  if (d_new.is_zero()) throw DegenerateMerge(e, s);

  std::vector<Label> labels;
  for (Label l : labels_) {
    if (l != e && l != s) labels.push_back(l);
  }
  labels.push_back(k);
  std::sort(labels.begin(), labels.end());
  const std::size_t m = labels.size();
  // Source row and column of every new index.
  std::vector<std::size_t> src_row(m), src_col(m);
  for (std::size_t x = 0; x < m; ++x) {
    src_row[x] = labels[x] == k ? is : index_of(labels[x]);
    src_col[x] = labels[x] == k ? ie : index_of(labels[x]);
  }

  // With A(e, s) = 0 the pivot is unchanged and only the rank-one update
  // needs dividing.
  if (at(ie, is).is_zero()) {
    std::vector<MultiPoly> next(m * m);
    bool exact = true;
    for (std::size_t x = 0; x < m && exact; ++x) {
      const MultiPoly& bis = at(src_row[x], is);
      for (std::size_t y = 0; y < m; ++y) {
        MultiPoly v = at(src_row[x], src_col[y]);
        const MultiPoly& bej = at(ie, src_col[y]);
        if (!bis.is_zero() && !bej.is_zero()) {
          std::optional<MultiPoly> q = symcalc::try_divide(bis * bej, d_);
          if (!q) {
            exact = false;
            break;
          }
          v += *q;
        }
        next[x * m + y] = std::move(v);
      }
    }
    if (exact) {
      labels_ = std::move(labels);
      b_ = std::move(next);
      return;
    }
  }

  std::vector<MultiPoly> num(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    const MultiPoly& bis = at(src_row[x], is);
    for (std::size_t y = 0; y < m; ++y) {
      const MultiPoly& bij = at(src_row[x], src_col[y]);
      const MultiPoly& bej = at(ie, src_col[y]);
      MultiPoly v = bij.is_zero() ? MultiPoly() : bij * d_new;
      if (!bis.is_zero() && !bej.is_zero()) v += bis * bej;
      num[x * m + y] = std::move(v);
    }
  }

  bool exact = true;
  std::vector<MultiPoly> quo(m * m);
  if (d_.is_one()) {
    quo = num;
  } else {
    for (std::size_t x = 0; x < m * m && exact; ++x) {
      if (num[x].is_zero()) continue;
      std::optional<MultiPoly> q = symcalc::try_divide(num[x], d_);
      if (q) {
        quo[x] = std::move(*q);
      } else {
        exact = false;
      }
    }
  }
  labels_ = std::move(labels);
  if (exact) {
    b_ = std::move(quo);
    d_ = std::move(d_new);
  } else {
    b_ = std::move(num);
    c_ = c_ / RatFun(d_);
    d_ = d_ * d_new;
  }
}

FracFreeState FracFreeState::disjoint(const FracFreeState& a,
                                      const FracFreeState& b) {
  FracFreeState out;
  std::set_union(a.labels_.begin(), a.labels_.end(), b.labels_.begin(),
                 b.labels_.end(), std::back_inserter(out.labels_));
  if (out.labels_.size() != a.n() + b.n()) {
    throw LabelClash("disjoint union of states with a shared label");
  }
  out.c_ = a.c_ * b.c_;
  out.d_ = a.d_ * b.d_;
  const std::size_t m = out.n();
  out.b_.assign(m * m, MultiPoly());
  auto place = [&](const FracFreeState& src, const MultiPoly& scale) {
    std::vector<std::size_t> idx(src.n());
    for (std::size_t x = 0; x < src.n(); ++x) idx[x] = out.index_of(src.labels_[x]);
    for (std::size_t x = 0; x < src.n(); ++x) {
      for (std::size_t y = 0; y < src.n(); ++y) {
        const MultiPoly& v = src.at(x, y);
        if (!v.is_zero()) out.at(idx[x], idx[y]) = scale.is_one() ? v : v * scale;
      }
    }
  };
  place(a, b.d_);
  place(b, a.d_);
  return out;
}

RatFun FracFreeState::omega() const { return c_ * RatFun(d_); }

GammaState FracFreeState::to_state() const {
  GammaState out;
  out.omega = omega();
  out.labels = labels_;
  for (std::size_t x = 0; x < n(); ++x) {
    for (std::size_t y = 0; y < n(); ++y) {
      if (!at(x, y).is_zero()) {
        out.set(labels_[x], labels_[y], RatFun(at(x, y), d_));
      }
    }
  }
  return out;
}

namespace {

// Components of a partially evaluated expression. Generators stay separate
// until a merge joins them, which keeps the dense matrices small.
class Forest {
 public:
  Forest(GeneratorFn gen, bool doubled) : gen_(gen), doubled_(doubled) {}

  void eval(const tangle::Node* n) {
    switch (n->kind) {
      case tangle::NodeKind::kUnion:
        eval(n->left.get());
        eval(n->right.get());
        break;
      case tangle::NodeKind::kMerge:
        eval(n->left.get());
        merge(n->e, n->s, n->k);
        break;
      default:
        add(gen_(*n));
        break;
    }
  }

  FracFreeState result() {
    std::optional<FracFreeState> out;
    for (auto& c : comps_) {
      if (!c) continue;
      out = out ? FracFreeState::disjoint(*out, *c) : std::move(*c);
    }
    return std::move(*out);
  }

 private:
  void add(FracFreeState st) {
    const std::size_t id = comps_.size();
    for (Label l : st.labels()) comp_of_[l] = id;
    comps_.push_back(std::move(st));
  }

  void merge(Label e, Label s, Label k) {
    const std::size_t ce = comp_of_.at(e), cs = comp_of_.at(s);
    std::size_t c = ce;
    if (ce != cs) {
      comps_[ce] = FracFreeState::disjoint(*comps_[ce], *comps_[cs]);
      for (Label l : comps_[cs]->labels()) comp_of_[l] = ce;
      comps_[cs].reset();
    }
    comps_[c]->merge(e, s, k);
    comp_of_.erase(e);
    comp_of_.erase(s);
    comp_of_[k] = c;
    if (doubled_) {
      comps_[c]->merge(-e, -s, -k);
      comp_of_.erase(-e);
      comp_of_.erase(-s);
      comp_of_[-k] = c;
    }
  }

  GeneratorFn gen_;
  bool doubled_;
  std::vector<std::optional<FracFreeState>> comps_;
  std::unordered_map<Label, std::size_t> comp_of_;
};

}  // namespace

FracFreeState evaluate(const tangle::Expr& e, GeneratorFn gen, bool doubled) {
  tangle::require_valid(e);
  Forest f(gen, doubled);
  f.eval(e.ptr().get());
  return f.result();
}

}  // namespace ctkit::gamma
