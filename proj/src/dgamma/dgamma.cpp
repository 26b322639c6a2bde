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


#include "ctkit/dgamma/dgamma.hpp"

#include <set>

#include "ctkit/errors.hpp"
#include "ctkit/tangle/dsl.hpp"

namespace ctkit::dgamma {
namespace {

using gamma::FracFreeState;
using symcalc::MultiPoly;
using Entries = std::map<std::pair<Label, Label>, MultiPoly>;

FracFreeState ff_dgen(const tangle::Node& n) {
  const MultiPoly one = MultiPoly::constant(1);
  switch (n.kind) {
    case tangle::NodeKind::kStrand: {
      const Label i = n.a;
      return FracFreeState({i, -i}, Entries{{{i, i}, one}, {{-i, -i}, one}});
    }
    case tangle::NodeKind::kCrossing: {
      const Label i = n.a, j = n.b;
      const bool pos = n.sign > 0;
      const MultiPoly t = MultiPoly::t_power(pos ? 1 : -1);
      const MultiPoly diag = t * t;
      const MultiPoly top = pos ? (one - t) * t : one - t;
      const MultiPoly bottom = pos ? one - t : (one - t) * t;
      return FracFreeState({i, -i, j, -j},
                           Entries{{{i, i}, one},
                                   {{-i, -i}, one},
                                   {{j, j}, diag},
                                   {{-j, -j}, diag},
                                   {{i, j}, top},
                                   {{i, -j}, top},
                                   {{-i, j}, bottom},
                                   {{-i, -j}, bottom}});
    }
    case tangle::NodeKind::kHVertex: {
      const Label i = n.a, j = n.b;
      const std::string hs = tangle::vertex_symbol(n.name);
      const auto syms = symcalc::Symbols::make({hs});
      const MultiPoly h = MultiPoly::variable(hs, syms);
      const MultiPoly t = MultiPoly::t_power(1);
      return FracFreeState({i, -i, j, -j},
                           Entries{{{-i, -i}, t},
                                   {{j, -j}, t},
                                   {{-j, -i}, one - t},
                                   {{-i, -j}, one - t},
                                   {{i, -j}, (one - h) * t},
                                   {{-j, -j}, (h - one) * t},
                                   {{-j, j}, one - h},
                                   {{-j, i}, one},
                                   {{i, j}, h}});
    }
    default:
      throw LabelError("not a generator");
  }
}

}  // namespace

GammaState dgen(const tangle::Node& atom) { return ff_dgen(atom).to_state(); }

GammaState dmerge(const GammaState& st, Label e, Label s, Label k) {
  return gamma::merge_state(gamma::merge_state(st, e, s, k), -e, -s, -k);
}

GammaState eval_dgamma(const tangle::Expr& e) {
  return gamma::evaluate(e, &ff_dgen, true).to_state();
}

RatFun eval_dgamma_omega(const tangle::Expr& e) {
  return gamma::evaluate(e, &ff_dgen, true).omega();
}

std::vector<std::string> chain_order(const tangle::Expr& e) {
  const tangle::Geometry g = tangle::derive_geometry(e);
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& p : g.strands) {
    for (const tangle::Segment& s : p.segments) {
      const tangle::Node* a = g.atoms[s.atom];
      if (a->kind == tangle::NodeKind::kHVertex && seen.insert(a->name).second) {
        out.push_back(a->name);
      }
    }
  }
  return out;
}

InvariantReport dgamma1(const tangle::Expr& input, const ReportOptions& opts) {
  InvariantReport r;
  const tangle::Expr e = opts.frame_zero ? tangle::frame_zero(input) : input;
  try {
    r.source = tangle::to_dsl(e);
  } catch (const LabelError&) {
    r.source.clear();
  }
  r.piece_writhes = tangle::piece_writhes(e);
  for (const auto& pw : r.piece_writhes) {
    if (pw.writhe != 0) {
      r.warnings.push_back("piece " + std::to_string(pw.piece) + " of strand " +
                           std::to_string(pw.strand) + " has writhe " +
                           std::to_string(pw.writhe));
    }
  }

  std::map<std::string, RatFun> rename;
  int next = 1;
  for (const std::string& name : chain_order(e)) {
    r.h_labeling[name] = next;
    const std::string target = "h" + std::to_string(next++);
    const auto syms = symcalc::Symbols::make({target});
    rename[tangle::vertex_symbol(name)] = RatFun(MultiPoly::variable(target, syms));
  }
  auto apply = [&](const RatFun& f) {
    std::map<std::string, RatFun> used;
    for (const auto& [sym, v] : rename) {
      if (f.symbols()->index_of(sym)) used.emplace(sym, v);
    }
    return used.empty() ? f : symcalc::substitute(f, used);
  };

  if (opts.with_matrix) {
    GammaState st = eval_dgamma(e);
    st.omega = apply(st.omega);
    for (auto& [ij, v] : st.entries) v = apply(v);
    r.dgamma1 = symcalc::unit_normalize(st.omega);
    r.a_part = std::move(st);
  } else {
    r.dgamma1 = symcalc::unit_normalize(apply(eval_dgamma_omega(e)));
  }
  return r;
}

}  // namespace ctkit::dgamma
