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


// Planar layout of a gCT diagram. The chain runs along y = 0; at each site
// it descends in a two-strand finger to the gadget of its contact and
// returns. Coordinates are doubled so every point is an integer.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "ctkit/errors.hpp"
#include "ctkit/gct/diagram.hpp"
#include "ctkit/tangle/geometry.hpp"

namespace ctkit::gct {
namespace {

struct Point {
  long x = 0;
  long y = 0;
};

enum class Role { kAxis, kLegDown, kOut, kTip, kReturn, kLegUp };

struct Seg {
  Point p0, p1;
  int contact = -1;  // -1 on the axis
  int end = 0;       // 0 for the first endpoint of the contact
  Role role = Role::kAxis;
  bool vertical() const { return p0.x == p1.x; }
  Point dir() const { return Point{p1.x - p0.x, p1.y - p0.y}; }
};

long cross(Point u, Point v) { return u.x * v.y - u.y * v.x; }

// Level 1 + the largest level of any contact this one must pass below.
// Contact j lies below i when i is nested in j or when they interleave and
// j starts later.
std::vector<int> levels(const Diagram& d) {
  const std::size_t n = d.size();
  std::vector<std::vector<std::size_t>> below(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Contact &p = d.contacts[i], &q = d.contacts[j];
      if ((q.a < p.a && p.b < q.b) || (p.a < q.a && q.a < p.b && p.b < q.b)) {
        below[j].push_back(i);
      }
    }
  }
  std::vector<int> level(n, 0);
  std::function<int(std::size_t)> f = [&](std::size_t i) {
    if (level[i]) return level[i];
    int m = 0;
    for (std::size_t j : below[i]) m = std::max(m, f(j));
    return level[i] = m + 1;
  };
  for (std::size_t i = 0; i < n; ++i) f(i);
  return level;
}

std::vector<Seg> layout(const Diagram& d) {
  const std::vector<int> level = levels(d);
  std::map<int, std::pair<int, int>> site;
  for (std::size_t c = 0; c < d.size(); ++c) {
    site[d.contacts[c].a] = {static_cast<int>(c), 0};
    site[d.contacts[c].b] = {static_cast<int>(c), 1};
  }
  std::vector<Seg> segs;
  Point at{0, 0};
  auto go = [&](Point p, int c, int end, Role r) {
    segs.push_back(Seg{at, p, c, end, r});
    at = p;
  };
  const int n2 = static_cast<int>(2 * d.size());
  for (int k = 1; k <= n2; ++k) {
    const auto [c, end] = site.at(k);
    const Contact& ct = d.contacts[c];
    const long depth = 20L * level[c];
    const long g = 20L * ct.a + 10;
    long gap, tip;
    if (ct.sigma == 0) {
      gap = 4;
      tip = end == 0 ? g - 1 : g + 1;
    } else {
      gap = end == 0 ? 4 : 2;
      tip = end == 0 ? g + 1 : g - 1;
    }
    const long y1 = end == 0 ? depth + gap : depth - gap;
    const long y2 = end == 0 ? depth - gap : depth + gap;
    const long x0 = 20L * k;
    go(Point{x0 - 2, 0}, -1, 0, Role::kAxis);
    go(Point{x0 - 2, -y1}, c, end, Role::kLegDown);
    go(Point{tip, -y1}, c, end, Role::kOut);
    go(Point{tip, -y2}, c, end, Role::kTip);
    go(Point{x0 + 2, -y2}, c, end, Role::kReturn);
    go(Point{x0 + 2, 0}, c, end, Role::kLegUp);
  }
  go(Point{20L * (n2 + 1), 0}, -1, 0, Role::kAxis);
  return segs;
}

// Strict interior intersection of a vertical and a horizontal segment, as
// fractions along each.
std::optional<std::pair<double, double>> intersect(const Seg& s, const Seg& t) {
  if (s.vertical() == t.vertical()) return std::nullopt;
  const Seg& v = s.vertical() ? s : t;
  const Seg& h = s.vertical() ? t : s;
  const long x = v.p0.x, y = h.p0.y;
  if (!(std::min(h.p0.x, h.p1.x) < x && x < std::max(h.p0.x, h.p1.x))) return std::nullopt;
  if (!(std::min(v.p0.y, v.p1.y) < y && y < std::max(v.p0.y, v.p1.y))) return std::nullopt;
  const double fv = static_cast<double>(y - v.p0.y) / static_cast<double>(v.p1.y - v.p0.y);
  const double fh = static_cast<double>(x - h.p0.x) / static_cast<double>(h.p1.x - h.p0.x);
  return s.vertical() ? std::make_pair(fv, fh) : std::make_pair(fh, fv);
}

struct Event {
  double param = 0;
  bool vertex = false;
  int contact = 0;   // vertex events
  int end = 0;       // vertex events
  int crossing = 0;  // crossing events
  bool over = false;
  int sign = 0;
};

}  // namespace

tangle::Expr compile(const Diagram& d, const CompileOptions& opts) {
  const std::vector<Seg> segs = layout(d);
  std::vector<Event> events;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const Seg& s = segs[i];
    if (s.role == Role::kTip && d.contacts[s.contact].sigma == 0) {
      Event e;
      e.param = static_cast<double>(i) + 0.5;
      e.vertex = true;
      e.contact = s.contact;
      e.end = s.end;
      events.push_back(e);
    }
  }
  int ncross = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 2; j < segs.size(); ++j) {
      const auto hit = intersect(segs[i], segs[j]);
      if (!hit) continue;
      const Seg &si = segs[i], &sj = segs[j];
      const Point di = si.dir(), dj = sj.dir();
      bool i_over;
      if (si.contact != sj.contact) {
        // The contact that starts earlier is in front.
        i_over = d.contacts[si.contact].a < d.contacts[sj.contact].a;
      } else {
        // Inside a clasp gadget the sign is fixed by the contact.
        const int sigma = d.contacts[si.contact].sigma;
        if (sigma == 0) throw InvalidDiagram("hard contact fingers intersect");
        i_over = (cross(di, dj) > 0) == (sigma > 0);
      }
      const int sign = cross(i_over ? di : dj, i_over ? dj : di) > 0 ? 1 : -1;
      Event a, b;
      a.param = static_cast<double>(i) + hit->first;
      b.param = static_cast<double>(j) + hit->second;
      a.crossing = b.crossing = ncross++;
      a.over = i_over;
      b.over = !i_over;
      a.sign = b.sign = sign;
      events.push_back(a);
      events.push_back(b);
    }
  }
  std::sort(events.begin(), events.end(),
            [](const Event& x, const Event& y) { return x.param < y.param; });

  if (events.empty()) return tangle::Expr::strand(1);

  // Hard contacts are named by order of first endpoint.
  std::map<int, std::string> vertex_name;
  for (std::size_t c = 0; c < d.size(); ++c) {
    if (d.contacts[c].sigma == 0) {
      vertex_name[static_cast<int>(c)] = std::to_string(vertex_name.size() + 1);
    }
  }
  std::map<int, std::pair<tangle::Label, tangle::Label>> vertex_slots, crossing_slots;
  std::map<int, int> crossing_sign;
  std::vector<tangle::Label> chain;
  for (std::size_t k = 0; k < events.size(); ++k) {
    const tangle::Label l = static_cast<tangle::Label>(k + 1);
    chain.push_back(l);
    const Event& e = events[k];
    if (e.vertex) {
      auto& slot = vertex_slots[e.contact];
      (e.end == 0 ? slot.first : slot.second) = l;
    } else {
      auto& slot = crossing_slots[e.crossing];
      (e.over ? slot.first : slot.second) = l;
      crossing_sign[e.crossing] = e.sign;
    }
  }
  std::vector<tangle::Expr> parts;
  for (const auto& [c, slot] : vertex_slots) {
    parts.push_back(tangle::Expr::hvertex(vertex_name.at(c), slot.first, slot.second));
  }
  for (const auto& [x, slot] : crossing_slots) {
    parts.push_back(tangle::Expr::crossing(slot.first, slot.second, crossing_sign.at(x)));
  }
  const tangle::Label final_label = static_cast<tangle::Label>(chain.size() + 1);
  // Events come in pairs, so the chain has at least two labels.
  tangle::Expr out =
      tangle::Expr::merge_all(tangle::Expr::disjoint(parts), chain, final_label);
  return opts.frame_zero ? tangle::frame_zero(out) : out;
}

}  // namespace ctkit::gct
