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


#include "ctkit/gct/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>

#include "json.hpp"

#include "ctkit/errors.hpp"

namespace ctkit::gct {
namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view s) : s_(s) {}

  std::vector<Contact> parse() {
    std::vector<Contact> out;
    skip();
    // Optional outer braces of the subscript form.
    bool outer = false;
    if (pos_ + 1 < s_.size() && s_[pos_] == '{' && next_nonspace(pos_ + 1) == '{') {
      outer = true;
      ++pos_;
    }
    while (true) {
      skip();
      if (pos_ >= s_.size() || (outer && s_[pos_] == '}')) break;
      out.push_back(pair());
      skip();
      if (pos_ < s_.size() && s_[pos_] == ',') ++pos_;
    }
    if (outer) {
      expect('}');
      skip();
    }
    if (pos_ != s_.size()) fail("unexpected text");
    if (out.empty()) fail("no contacts");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidDiagram(what + " at position " + std::to_string(pos_));
  }
  char next_nonspace(std::size_t p) const {
    while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
    return p < s_.size() ? s_[p] : '\0';
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || pos_ - start > 6) {
      pos_ = start;
      fail("expected a site number");
    }
    const int v = std::stoi(std::string(s_.substr(start, pos_ - start)));
    return neg ? -v : v;
  }
  int sign() {
    if (pos_ >= s_.size()) fail("expected a contact sign");
    const char c = s_[pos_];
    if (c == '+' || c == '-' || c == '0') {
      ++pos_;
      return c == '+' ? 1 : c == '-' ? -1 : 0;
    }
    if (c == '_') {
      ++pos_;
      int v;
      if (pos_ < s_.size() && s_[pos_] == '{') {
        ++pos_;
        v = integer();
        expect('}');
      } else {
        v = integer();
      }
      if (v < -1 || v > 1) fail("contact sign must be -1, 0 or 1");
      return v;
    }
    fail("expected a contact sign");
  }
  Contact pair() {
    expect('{');
    Contact c;
    c.a = integer();
    expect(',');
    c.b = integer();
    expect('}');
    c.sigma = sign();
    return c;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::vector<Contact> parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidDiagram(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_array()) throw InvalidDiagram("JSON diagram must be an array");
  std::vector<Contact> out;
  for (const auto& c : j) {
    if (!c.is_object() || !c.contains("a") || !c.contains("b") ||
        !c["a"].is_number_integer() || !c["b"].is_number_integer()) {
      throw InvalidDiagram("JSON contact needs integer fields a and b");
    }
    const int s = c.contains("s") ? c["s"].get<int>() : 0;
    if (s < -1 || s > 1) throw InvalidDiagram("contact sign must be -1, 0 or 1");
    out.push_back(Contact{c["a"].get<int>(), c["b"].get<int>(), s});
  }
  return out;
}

char sign_char(int s) { return s > 0 ? '+' : s < 0 ? '-' : '0'; }

}  // namespace

Diagram make_diagram(std::vector<Contact> contacts) {
  if (contacts.empty()) throw InvalidDiagram("a diagram needs at least one contact");
  const int n2 = static_cast<int>(2 * contacts.size());
  std::vector<bool> seen(n2 + 1, false);
  for (const Contact& c : contacts) {
    const std::string what =
        "{" + std::to_string(c.a) + "," + std::to_string(c.b) + "}";
    if (c.a >= c.b) throw InvalidDiagram("contact " + what + " needs a < b");
    if (c.sigma < -1 || c.sigma > 1) throw InvalidDiagram("bad sign on " + what);
    for (int x : {c.a, c.b}) {
      if (x < 1 || x > n2) {
        throw InvalidDiagram("site " + std::to_string(x) + " is outside 1.." +
                             std::to_string(n2));
      }
      if (seen[x]) throw InvalidDiagram("site " + std::to_string(x) + " is used twice");
      seen[x] = true;
    }
  }
  std::sort(contacts.begin(), contacts.end(),
            [](const Contact& x, const Contact& y) { return x.a < y.a; });
  return Diagram{std::move(contacts)};
}

Diagram parse_gct(std::string_view text) {
  std::size_t p = 0;
  while (p < text.size() && std::isspace(static_cast<unsigned char>(text[p]))) ++p;
  if (p < text.size() && text[p] == '[') return make_diagram(parse_json(text));
  return make_diagram(TextParser(text).parse());
}

std::string print(const Diagram& d) {
  std::string out;
  for (const Contact& c : d.contacts) {
    if (!out.empty()) out += ' ';
    out += "{" + std::to_string(c.a) + "," + std::to_string(c.b) + "}" + sign_char(c.sigma);
  }
  return out;
}

std::string to_json(const Diagram& d) {
  nlohmann::json j = nlohmann::json::array();
  for (const Contact& c : d.contacts) j.push_back({{"a", c.a}, {"b", c.b}, {"s", c.sigma}});
  return j.dump();
}

char relation_char(Relation r) {
  switch (r) {
    case Relation::kSeries:
      return 'S';
    case Relation::kParallel:
      return 'P';
    default:
      return 'X';
  }
}

Relation relation(const Contact& p0, const Contact& q0) {
  if (p0.a == q0.a || p0.a == q0.b || p0.b == q0.a || p0.b == q0.b) {
    throw InvalidPair("contacts share an endpoint");
  }
  const Contact& p = p0.a < q0.a ? p0 : q0;
  const Contact& q = p0.a < q0.a ? q0 : p0;
  if (p.b < q.a) return Relation::kSeries;
  if (q.b < p.b) return Relation::kParallel;
  return Relation::kCross;
}

std::vector<std::string> relation_matrix(const Diagram& d) {
  const std::size_t n = d.size();
  std::vector<std::string> out(n, std::string(n, '0'));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out[i][j] = out[j][i] = relation_char(relation(d.contacts[i], d.contacts[j]));
    }
  }
  return out;
}

Diagram insert_clasp(const Diagram& d, std::size_t i, std::size_t j, int sigma) {
  if (i >= d.size() || j >= d.size() || i == j) {
    throw InvalidDiagram("contact index out of range");
  }
  if (sigma != 1 && sigma != -1) throw InvalidDiagram("clasp sign must be +1 or -1");
  if (relation(d.contacts[i], d.contacts[j]) != Relation::kSeries) {
    throw NotSeries("contacts " + std::to_string(i + 1) + " and " +
                    std::to_string(j + 1) + " are not in series");
  }
  const Contact& first = d.contacts[std::min(i, j)];
  const Contact& second = d.contacts[std::max(i, j)];
  // New sites x = b1 + 1 and y = b2 + 2 in the renumbered chain.
  const int b1 = first.b, b2 = second.b;
  auto shift = [&](int s) { return s + (s > b1 ? 1 : 0) + (s > b2 ? 1 : 0); };
  std::vector<Contact> out;
  for (const Contact& c : d.contacts) out.push_back(Contact{shift(c.a), shift(c.b), c.sigma});
  out.push_back(Contact{b1 + 1, b2 + 2, sigma});
  return make_diagram(std::move(out));
}

bool has_loose_clasp(const Diagram& d) {
  return std::any_of(d.contacts.begin(), d.contacts.end(),
                     [](const Contact& c) { return c.sigma != 0 && c.b == c.a + 1; });
}

std::vector<Diagram> enumerate(int n, bool drop_loose_clasps) {
  std::vector<Diagram> out;
  if (n < 1) return out;
  std::vector<std::vector<std::pair<int, int>>> matchings;
  std::vector<std::pair<int, int>> cur;
  std::vector<bool> used(2 * n + 1, false);
  std::function<void()> rec = [&] {
    int first = 1;
    while (first <= 2 * n && used[first]) ++first;
    if (first > 2 * n) {
      matchings.push_back(cur);
      return;
    }
    used[first] = true;
    for (int b = first + 1; b <= 2 * n; ++b) {
      if (used[b]) continue;
      used[b] = true;
      cur.emplace_back(first, b);
      rec();
      cur.pop_back();
      used[b] = false;
    }
    used[first] = false;
  };
  rec();
  int combos = 1;
  for (int i = 0; i < n; ++i) combos *= 3;
  for (const auto& m : matchings) {
    for (int code = 0; code < combos; ++code) {
      Diagram d;
      int rest = code;
      std::vector<int> signs(n);
      for (int i = n - 1; i >= 0; --i) {
        signs[i] = rest % 3 - 1;
        rest /= 3;
      }
      for (int i = 0; i < n; ++i) d.contacts.push_back(Contact{m[i].first, m[i].second, signs[i]});
      if (drop_loose_clasps && has_loose_clasp(d)) continue;
      out.push_back(std::move(d));
    }
  }
  return out;
}

std::uint64_t enumerate_count(int n) {
  std::uint64_t c = 1;
  for (int k = 1; k <= n; ++k) c *= static_cast<std::uint64_t>(3 * (2 * k - 1));
  return n < 1 ? 0 : c;
}

Diagram random_diagram(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidDiagram("a diagram needs at least one contact");
  // Fisher-Yates with plain modulo draws so the output depends only on the
  // mt19937_64 stream.
  std::mt19937_64 rng(seed);
  std::vector<int> sites(2 * n);
  for (int i = 0; i < 2 * n; ++i) sites[i] = i + 1;
  for (int i = 2 * n - 1; i > 0; --i) {
    std::swap(sites[i], sites[rng() % static_cast<std::uint64_t>(i + 1)]);
  }
  std::vector<Contact> cs;
  for (int i = 0; i < n; ++i) {
    const int x = sites[2 * i], y = sites[2 * i + 1];
    cs.push_back(Contact{std::min(x, y), std::max(x, y), static_cast<int>(rng() % 3) - 1});
  }
  return make_diagram(std::move(cs));
}

}  // namespace ctkit::gct
