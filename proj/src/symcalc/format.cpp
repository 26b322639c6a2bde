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

#include "ctkit/symcalc/format.hpp"

#include <cctype>
#include <string>
#include <vector>

#include "ctkit/errors.hpp"

namespace ctkit::symcalc {
namespace {

std::string monomial_text(const Term& t, const Symbols& syms) {
  std::string out;
  auto append = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += '^' + std::to_string(e);
  };
  for (std::size_t i = 1; i < syms.size(); ++i) append(syms[i], t.exps[i]);
  append(syms[0], t.exps[0]);
  return out;
}

// First character is the base, the rest a subscript: h12 -> h_{12}.
std::string latex_name(const std::string& name) {
  if (name.size() < 2) return name;
  std::string sub = name.substr(1);
  return name.substr(0, 1) + (sub.size() == 1 ? "_" + sub : "_{" + sub + "}");
}

std::string monomial_latex(const Term& t, const Symbols& syms) {
  std::string out;
  auto append = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += ' ';
    out += latex_name(name);
    if (e != 1) {
      std::string s = std::to_string(e);
      out += s.size() == 1 ? "^" + s : "^{" + s + "}";
    }
  };
  for (std::size_t i = 1; i < syms.size(); ++i) append(syms[i], t.exps[i]);
  append(syms[0], t.exps[0]);
  return out;
}

std::string rational_latex(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFun parse() {
    RatFun v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
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
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFun expr() {
    RatFun v;
    bool first = true;
    while (true) {
      bool neg = false;
      if (accept('-')) {
        neg = true;
      } else if (!accept('+') && !first) {
        return v;
      }
      RatFun t = term();
      v = neg ? v - t : v + t;
      first = false;
    }
  }

  RatFun term() {
    RatFun v = power();
    while (true) {
      if (accept('*')) {
        v *= power();
      } else if (accept('/')) {
        std::size_t at = pos_;
        RatFun d = power();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v /= d;
      } else {
        return v;
      }
    }
  }

  RatFun power() {
    RatFun base = atom();
    if (!accept('^')) return base;
    skip();
    bool neg = false;
    if (accept('-')) neg = true;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected exponent");
    if (pos_ - start > 6) fail("exponent too large");
    const int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    RatFun r = RatFun::constant(1);
    for (int i = 0; i < e; ++i) r *= base;
    if (neg) {
      if (r.is_zero()) throw ParseError("division by zero", start);
      r = RatFun::constant(1) / r;
    }
    return r;
  }

  RatFun atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RatFun v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      }
      return RatFun::constant(
          Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(s_.substr(start, pos_ - start));
      return RatFun(MultiPoly::variable(name, Symbols::make({name})));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (c < 0) c = -c;
    std::string mono = monomial_text(t, *p.symbols());
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

std::string to_text(const RatFun& f) {
  if (f.is_polynomial()) return to_text(f.num());
  return "(" + to_text(f.num()) + ")/(" + to_text(f.den()) + ")";
}

std::string to_latex(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!first) {
      out += '+';
    }
    first = false;
    std::string mono = monomial_latex(t, *p.symbols());
    if (mono.empty()) {
      out += rational_latex(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += rational_latex(c) + " " + mono;
    }
  }
  return out;
}

std::string to_latex(const RatFun& f) {
  if (f.is_polynomial()) return to_latex(f.num());
  return "\\frac{" + to_latex(f.num()) + "}{" + to_latex(f.den()) + "}";
}

RatFun parse_ratfun(std::string_view text) { return Parser(text).parse(); }

MultiPoly parse_poly(std::string_view text) {
  RatFun f = parse_ratfun(text);
  if (!f.is_polynomial()) {
    throw ParseError("expected a Laurent polynomial", text.size());
  }
  return f.num();
}

}  // namespace ctkit::symcalc
