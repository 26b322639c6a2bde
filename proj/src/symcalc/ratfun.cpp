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

#include "ctkit/symcalc/ratfun.hpp"

#include <utility>
#include <vector>

#include "ctkit/errors.hpp"

namespace ctkit::symcalc {

RatFun::RatFun(const MultiPoly& num)
    : num_(num), den_(MultiPoly::constant(1, num.symbols())) {}

RatFun::RatFun(const MultiPoly& num, const MultiPoly& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero();
  reduce();
}

void RatFun::reduce() {
  unify(num_, den_);
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(1, num_.symbols());
    return;
  }
  if (!den_.is_t_monomial()) {
    MultiPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  const int k = den_.min_degree(0);
  if (k != 0) {
    num_ = num_.shifted_t(-k);
    den_ = den_.shifted_t(-k);
  }
  if (den_.is_constant()) {
    num_ *= Rational(1 / den_.constant_value());
    den_ = MultiPoly::constant(1, num_.symbols());
    return;
  }
  MultiPoly d = integer_primitive(den_);
  Rational s = d.leading().coef / den_.leading().coef;
  num_ *= s;
  den_ = std::move(d);
}

RatFun RatFun::operator-() const { return RatFun(-num_, den_, Raw{}); }

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.is_polynomial()) {
      MultiPoly n = a.num_ + b.num_;
      MultiPoly d = MultiPoly::constant(1, n.symbols());
      return RatFun(std::move(n), std::move(d), RatFun::Raw{});
    }
    return RatFun(a.num_ + b.num_, a.den_);
  }
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) {
  if (a.is_polynomial() && b.is_polynomial()) {
    MultiPoly n = a.num_ * b.num_;
    MultiPoly d = MultiPoly::constant(1, n.symbols());
    return RatFun(std::move(n), std::move(d), RatFun::Raw{});
  }
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw DivisionByZero();
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFun arith(const RatFun& a, const RatFun& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd:
      return a + b;
    case ArithOp::kSub:
      return a - b;
    case ArithOp::kMul:
      return a * b;
    case ArithOp::kDiv:
      return a / b;
  }
  return a;
}

namespace {

RatFun eval_poly(const MultiPoly& p, const std::vector<RatFun>& values) {
  const std::size_t n = p.symbols()->size();
  // Powers are cached per symbol and exponent.
  std::vector<std::vector<RatFun>> pos(n), neg(n);
  auto power = [&](std::size_t i, int e) -> const RatFun& {
    auto& cache = e >= 0 ? pos[i] : neg[i];
    const int m = e >= 0 ? e : -e;
    if (cache.empty()) {
      cache.push_back(RatFun::constant(1));
      if (e < 0) {
        if (values[i].is_zero()) throw DivisionByZero();
        cache.push_back(RatFun::constant(1) / values[i]);
      } else {
        cache.push_back(values[i]);
      }
    }
    while (static_cast<int>(cache.size()) <= m) {
      cache.push_back(cache.back() * cache[1]);
    }
    return cache[m];
  };
  RatFun sum;
  for (const auto& t : p.terms()) {
    RatFun term = RatFun::constant(t.coef);
    for (std::size_t i = 0; i < n; ++i) {
      if (t.exps[i] != 0) term *= power(i, t.exps[i]);
    }
    sum += term;
  }
  return sum;
}

}  // namespace

RatFun substitute(const RatFun& f,
                  const std::map<std::string, RatFun>& bindings) {
  const SymbolsPtr& syms = f.symbols();
  for (const auto& [name, value] : bindings) {
    if (!syms->index_of(name)) throw UnknownSymbol(name);
  }
  std::vector<RatFun> values;
  values.reserve(syms->size());
  for (const auto& name : syms->names()) {
    auto it = bindings.find(name);
    if (it != bindings.end()) {
      values.push_back(it->second);
    } else {
      values.emplace_back(MultiPoly::variable(name, Symbols::make({name})));
    }
  }
  RatFun num = eval_poly(f.num(), values);
  RatFun den = eval_poly(f.den(), values);
  if (den.is_zero()) throw DivisionByZero("substitution makes a denominator vanish");
  return num / den;
}

LaurentNormal unit_normalize(const RatFun& f) {
  if (f.is_zero()) throw ZeroValue();
  if (!f.is_polynomial()) {
    throw NotLaurent("value has a non-unit denominator");
  }
  LaurentNormal out;
  const MultiPoly& p = f.num();
  out.unit_exponent = p.min_degree(0);
  out.poly = p.shifted_t(-out.unit_exponent);
  // Terms are ordered by descending t, so the t^0 part comes last.
  for (const auto& t : out.poly.terms()) {
    if (t.exps[0] == 0) {
      if (t.coef < 0) {
        out.poly = -out.poly;
        out.unit_sign = -1;
      }
      break;
    }
  }
  return out;
}

bool equal_up_to_unit(const RatFun& f, const RatFun& g) {
  return unit_normalize(f).poly == unit_normalize(g).poly;
}

}  // namespace ctkit::symcalc
