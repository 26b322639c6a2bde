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

#ifndef CTKIT_SYMCALC_RATFUN_HPP_
#define CTKIT_SYMCALC_RATFUN_HPP_

#include <map>
#include <string>

#include "ctkit/symcalc/multipoly.hpp"

namespace ctkit::symcalc {

// A reduced quotient num / den. The denominator is nonzero, has minimum
// t-degree 0 and a positive leading coefficient; it is exactly 1 when the
// value is a Laurent polynomial.
class RatFun {
 public:
  RatFun() = default;
  RatFun(const MultiPoly& num);  // NOLINT(google-explicit-constructor)
  RatFun(const MultiPoly& num, const MultiPoly& den);
  static RatFun constant(const Rational& c) {
    return RatFun(MultiPoly::constant(c));
  }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  const SymbolsPtr& symbols() const { return num_.symbols(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

  // Cross-multiplication equality.
  friend bool operator==(const RatFun& a, const RatFun& b);
  friend bool operator!=(const RatFun& a, const RatFun& b) {
    return !(a == b);
  }

 private:
  struct Raw {};
  RatFun(MultiPoly num, MultiPoly den, Raw)
      : num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  MultiPoly num_;
  MultiPoly den_ = MultiPoly::constant(1);
};

enum class ArithOp { kAdd, kSub, kMul, kDiv };

RatFun arith(const RatFun& a, const RatFun& b, ArithOp op);

// Simultaneous substitution of symbols by rational functions.
RatFun substitute(const RatFun& f, const std::map<std::string, RatFun>& bindings);

// original = unit_sign * t^unit_exponent * poly.
struct LaurentNormal {
  MultiPoly poly;
  int unit_exponent = 0;
  int unit_sign = 1;
};

LaurentNormal unit_normalize(const RatFun& f);
bool equal_up_to_unit(const RatFun& f, const RatFun& g);

}  // namespace ctkit::symcalc

#endif  // CTKIT_SYMCALC_RATFUN_HPP_
