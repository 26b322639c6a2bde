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

#ifndef CTKIT_SYMCALC_MULTIPOLY_HPP_
#define CTKIT_SYMCALC_MULTIPOLY_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace ctkit::symcalc {

using Rational = mpq_class;

// Name of the distinguished Laurent variable. It is always symbol 0.
inline constexpr std::string_view kT = "t";

// Natural ordering of symbol names: "t" first, then by alphabetic prefix and
// numeric suffix, so h1 < h2 < h10 < hA.
bool symbol_less(std::string_view a, std::string_view b);

// An ordered, duplicate-free list of symbol names with "t" at index 0.
// Instances are immutable and shared between polynomials.
class Symbols {
 public:
  // Sorts by symbol_less, removes duplicates and inserts "t" if absent.
  static std::shared_ptr<const Symbols> make(std::vector<std::string> names);
  static const std::shared_ptr<const Symbols>& t_only();
  static std::shared_ptr<const Symbols> merge(
      const std::shared_ptr<const Symbols>& a,
      const std::shared_ptr<const Symbols>& b);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains_all(const Symbols& other) const;

  friend bool operator==(const Symbols& a, const Symbols& b) {
    return a.names_ == b.names_;
  }

 private:
  explicit Symbols(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using SymbolsPtr = std::shared_ptr<const Symbols>;

bool same_symbols(const SymbolsPtr& a, const SymbolsPtr& b);

// One exponent per symbol. Only the exponent of t may be negative.
using Exponents = boost::container::small_vector<std::int32_t, 6>;

// Lexicographic comparison, t first. Returns <0, 0, >0.
int compare_lex(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exps;
  Rational coef;
};

// A Laurent polynomial in t with polynomial dependence on the remaining
// symbols, over the rationals. Terms are kept sorted by strictly decreasing
// lexicographic monomial order and never carry a zero coefficient.
class MultiPoly {
 public:
  MultiPoly();
  explicit MultiPoly(SymbolsPtr symbols);

  static MultiPoly constant(const Rational& c,
                            SymbolsPtr symbols = Symbols::t_only());
  static MultiPoly variable(std::string_view name, SymbolsPtr symbols);
  static MultiPoly monomial(const Rational& c, Exponents exps,
                            SymbolsPtr symbols);
  static MultiPoly t_power(int k, SymbolsPtr symbols = Symbols::t_only());
  // Builds from unsorted terms, combining like monomials.
  static MultiPoly from_terms(std::vector<Term> terms, SymbolsPtr symbols);

  const SymbolsPtr& symbols() const { return symbols_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  // Single term.
  bool is_monomial() const { return terms_.size() == 1; }
  // c * t^k for some k.
  bool is_t_monomial() const;
  const Term& leading() const { return terms_.front(); }
  Rational constant_value() const;

  int min_degree(std::size_t var) const;
  int max_degree(std::size_t var) const;
  bool depends_on(std::size_t var) const;

  // Re-expresses the polynomial over a superset of its symbols.
  MultiPoly with_symbols(const SymbolsPtr& wider) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

  // Multiplies by t^k.
  MultiPoly shifted_t(int k) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

 private:
  friend class PolyBuilder;
  SymbolsPtr symbols_;
  std::vector<Term> terms_;
};

// Brings a and b onto a common symbol list.
void unify(MultiPoly& a, MultiPoly& b);

MultiPoly pow(const MultiPoly& p, unsigned n);

// Exact quotient num / den, or nullopt when den does not divide num in the
// Laurent ring. Throws DivisionByZero when den is zero.
std::optional<MultiPoly> try_divide(const MultiPoly& num, const MultiPoly& den);
// As try_divide, but throws InexactDivision on a remainder.
MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den);

// Scales p by a positive or negative rational so its coefficients are coprime
// integers and its leading coefficient is positive. Zero maps to zero.
MultiPoly integer_primitive(const MultiPoly& p);

// Greatest common divisor modulo units (rationals and powers of t). The result
// has minimum t-degree 0 and is integer_primitive. gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace ctkit::symcalc

#endif  // CTKIT_SYMCALC_MULTIPOLY_HPP_
