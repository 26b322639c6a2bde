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

#include "ctkit/symcalc/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

#include "ctkit/errors.hpp"

namespace ctkit::symcalc {
namespace {

// Splits "h12" into ("h", 12); names without a numeric suffix get -1.
std::pair<std::string_view, long> split_name(std::string_view s) {
  std::size_t i = s.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
  if (i == s.size() || s.size() - i > 9) return {s, -1};
  return {s.substr(0, i), std::stol(std::string(s.substr(i)))};
}

bool term_greater(const Term& a, const Term& b) {
  return compare_lex(a.exps, b.exps) > 0;
}

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// Combines runs of equal monomials in a sorted term list and drops zeros.
void combine_sorted(std::vector<Term>& terms) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].coef;
    while (j < terms.size() && terms[j].exps == terms[i].exps) {
      c += terms[j].coef;
      ++j;
    }
    if (c != 0) {
      if (out != i) terms[out].exps = std::move(terms[i].exps);
      terms[out].coef = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Sorted merge of a + sign*b over identical symbol lists.
std::vector<Term> merge_add(const std::vector<Term>& a,
                            const std::vector<Term>& b, bool subtract) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size()   ? -1
            : j == b.size() ? 1
                            : compare_lex(a[i].exps, b[j].exps);
    if (c > 0) {
      r.push_back(a[i++]);
    } else if (c < 0) {
      r.push_back(b[j++]);
      if (subtract) r.back().coef = -r.back().coef;
    } else {
      Rational s = subtract ? Rational(a[i].coef - b[j].coef)
                            : Rational(a[i].coef + b[j].coef);
      if (s != 0) r.push_back(Term{a[i].exps, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

bool symbol_less(std::string_view a, std::string_view b) {
  if (a == b) return false;
  if (a == kT) return true;
  if (b == kT) return false;
  auto [pa, na] = split_name(a);
  auto [pb, nb] = split_name(b);
  if (pa != pb) return pa < pb;
  if (na != nb) return na < nb;
  return a < b;
}

std::shared_ptr<const Symbols> Symbols::make(std::vector<std::string> names) {
  names.emplace_back(kT);
  std::sort(names.begin(), names.end(),
            [](const std::string& x, const std::string& y) {
              return symbol_less(x, y);
            });
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return std::shared_ptr<const Symbols>(new Symbols(std::move(names)));
}

const std::shared_ptr<const Symbols>& Symbols::t_only() {
  static const std::shared_ptr<const Symbols> kOnly = make({});
  return kOnly;
}

std::shared_ptr<const Symbols> Symbols::merge(
    const std::shared_ptr<const Symbols>& a,
    const std::shared_ptr<const Symbols>& b) {
  if (a == b || a->contains_all(*b)) return a;
  if (b->contains_all(*a)) return b;
  std::vector<std::string> names = a->names_;
  names.insert(names.end(), b->names_.begin(), b->names_.end());
  return make(std::move(names));
}

std::optional<std::size_t> Symbols::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool Symbols::contains_all(const Symbols& other) const {
  if (other.size() > size()) return false;
  std::size_t i = 0;
  for (const auto& n : other.names_) {
    while (i < names_.size() && names_[i] != n) ++i;
    if (i == names_.size()) return false;
    ++i;
  }
  return true;
}

bool same_symbols(const SymbolsPtr& a, const SymbolsPtr& b) {
  return a == b || *a == *b;
}

int compare_lex(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

MultiPoly::MultiPoly() : symbols_(Symbols::t_only()) {}

MultiPoly::MultiPoly(SymbolsPtr symbols) : symbols_(std::move(symbols)) {}

MultiPoly MultiPoly::constant(const Rational& c, SymbolsPtr symbols) {
  MultiPoly p(std::move(symbols));
  if (c != 0) p.terms_.push_back(Term{Exponents(p.symbols_->size(), 0), c});
  return p;
}

MultiPoly MultiPoly::variable(std::string_view name, SymbolsPtr symbols) {
  auto idx = symbols->index_of(name);
  if (!idx) throw UnknownSymbol(std::string(name));
  Exponents e(symbols->size(), 0);
  e[*idx] = 1;
  return monomial(1, std::move(e), std::move(symbols));
}

MultiPoly MultiPoly::monomial(const Rational& c, Exponents exps,
                              SymbolsPtr symbols) {
  MultiPoly p(std::move(symbols));
  if (c != 0) p.terms_.push_back(Term{std::move(exps), c});
  return p;
}

MultiPoly MultiPoly::t_power(int k, SymbolsPtr symbols) {
  Exponents e(symbols->size(), 0);
  e[0] = k;
  return monomial(1, std::move(e), std::move(symbols));
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms, SymbolsPtr symbols) {
  MultiPoly p(std::move(symbols));
  std::sort(terms.begin(), terms.end(), term_greater);
  combine_sorted(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  for (auto e : terms_[0].exps) {
    if (e != 0) return false;
  }
  return true;
}

bool MultiPoly::is_one() const {
  return is_constant() && !terms_.empty() && terms_[0].coef == 1;
}

bool MultiPoly::is_t_monomial() const {
  if (terms_.size() != 1) return false;
  for (std::size_t i = 1; i < terms_[0].exps.size(); ++i) {
    if (terms_[0].exps[i] != 0) return false;
  }
  return true;
}

Rational MultiPoly::constant_value() const {
  return terms_.empty() ? Rational(0) : terms_[0].coef;
}

int MultiPoly::min_degree(std::size_t var) const {
  int m = std::numeric_limits<int>::max();
  for (const auto& t : terms_) m = std::min<int>(m, t.exps[var]);
  return terms_.empty() ? 0 : m;
}

int MultiPoly::max_degree(std::size_t var) const {
  int m = std::numeric_limits<int>::min();
  for (const auto& t : terms_) m = std::max<int>(m, t.exps[var]);
  return terms_.empty() ? 0 : m;
}

bool MultiPoly::depends_on(std::size_t var) const {
  for (const auto& t : terms_) {
    if (t.exps[var] != 0) return true;
  }
  return false;
}

MultiPoly MultiPoly::with_symbols(const SymbolsPtr& wider) const {
  if (same_symbols(symbols_, wider)) {
    MultiPoly p = *this;
    p.symbols_ = wider;
    return p;
  }
  std::vector<std::size_t> map(symbols_->size());
  for (std::size_t i = 0; i < symbols_->size(); ++i) {
    auto idx = wider->index_of((*symbols_)[i]);
    if (!idx) {
      if (depends_on(i)) throw UnknownSymbol((*symbols_)[i]);
      map[i] = std::numeric_limits<std::size_t>::max();
    } else {
      map[i] = *idx;
    }
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(wider->size(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (t.exps[i] != 0) e[map[i]] = t.exps[i];
    }
    terms.push_back(Term{std::move(e), t.coef});
  }
  return from_terms(std::move(terms), wider);
}

void unify(MultiPoly& a, MultiPoly& b) {
  if (a.symbols() == b.symbols()) return;
  if (*a.symbols() == *b.symbols()) {
    b = b.with_symbols(a.symbols());
    return;
  }
  auto s = Symbols::merge(a.symbols(), b.symbols());
  a = a.with_symbols(s);
  b = b.with_symbols(s);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  MultiPoly b = o;
  unify(*this, b);
  terms_ = merge_add(terms_, b.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  MultiPoly b = o;
  unify(*this, b);
  terms_ = merge_add(terms_, b.terms_, true);
  return *this;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  MultiPoly a = x, b = y;
  unify(a, b);
  MultiPoly r(a.symbols_);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.size() < b.size()) std::swap(a, b);
  if (b.size() == 1) {
    // Multiplying by a monomial preserves the order.
    const Term& m = b.terms_[0];
    r.terms_.reserve(a.size());
    for (const auto& t : a.terms_) {
      r.terms_.push_back(Term{add_exps(t.exps, m.exps), t.coef * m.coef});
    }
    return r;
  }
  std::vector<Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& u : b.terms_) {
    for (const auto& v : a.terms_) {
      terms.push_back(Term{add_exps(u.exps, v.exps), u.coef * v.coef});
    }
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  combine_sorted(terms);
  r.terms_ = std::move(terms);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

MultiPoly MultiPoly::shifted_t(int k) const {
  MultiPoly p = *this;
  if (k != 0) {
    for (auto& t : p.terms_) t.exps[0] += k;
  }
  return p;
}

bool operator==(const MultiPoly& x, const MultiPoly& y) {
  if (x.size() != y.size()) return false;
  if (same_symbols(x.symbols_, y.symbols_)) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x.terms_[i].coef != y.terms_[i].coef ||
          x.terms_[i].exps != y.terms_[i].exps) {
        return false;
      }
    }
    return true;
  }
  MultiPoly a = x, b = y;
  unify(a, b);
  return (a - b).is_zero();
}

MultiPoly pow(const MultiPoly& p, unsigned n) {
  MultiPoly r = MultiPoly::constant(1, p.symbols());
  MultiPoly base = p;
  while (n > 0) {
    if (n & 1u) r *= base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return r;
}

std::optional<MultiPoly> try_divide(const MultiPoly& num,
                                    const MultiPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  MultiPoly a = num, b = den;
  unify(a, b);
  MultiPoly q(a.symbols());
  if (a.is_zero()) return q;
  if (b.is_monomial()) {
    const Term& m = b.leading();
    std::vector<Term> terms;
    terms.reserve(a.size());
    for (const auto& t : a.terms()) {
      Exponents e(t.exps.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = t.exps[i] - m.exps[i];
        if (i > 0 && e[i] < 0) return std::nullopt;
      }
      terms.push_back(Term{std::move(e), t.coef / m.coef});
    }
    return MultiPoly::from_terms(std::move(terms), a.symbols());
  }
  const int min_t = a.min_degree(0) - b.min_degree(0);
  const Term lb = b.leading();
  std::vector<Term> qterms;
  MultiPoly r = std::move(a);
  while (!r.is_zero()) {
    const Term& lr = r.leading();
    Exponents e(lr.exps.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = lr.exps[i] - lb.exps[i];
      if (i > 0 && e[i] < 0) return std::nullopt;
    }
    if (e[0] < min_t) return std::nullopt;
    Rational c = lr.coef / lb.coef;
    MultiPoly step = MultiPoly::monomial(c, e, r.symbols()) * b;
    r -= step;
    qterms.push_back(Term{std::move(e), std::move(c)});
  }
  // Quotient terms were produced in decreasing order.
  MultiPoly out = MultiPoly::from_terms(std::move(qterms), r.symbols());
  return out;
}

MultiPoly divide_exact(const MultiPoly& num, const MultiPoly& den) {
  auto q = try_divide(num, den);
  if (!q) throw InexactDivision();
  return std::move(*q);
}

MultiPoly integer_primitive(const MultiPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = 0, l = 1;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rational s(l, g);
  if (p.leading().coef < 0) s = -s;
  if (s == 1) return p;
  return p * s;
}

namespace {

// Coefficient of var^d, as a polynomial not involving var.
MultiPoly coeff_of(const MultiPoly& p, std::size_t var, int d) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (t.exps[var] == d) {
      Term u = t;
      u.exps[var] = 0;
      terms.push_back(std::move(u));
    }
  }
  return MultiPoly::from_terms(std::move(terms), p.symbols());
}

// Distinct coefficients of p viewed as a polynomial in var.
std::vector<MultiPoly> coeffs_in(const MultiPoly& p, std::size_t var) {
  std::vector<int> degs;
  for (const auto& t : p.terms()) degs.push_back(t.exps[var]);
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  std::vector<MultiPoly> out;
  for (int d : degs) out.push_back(coeff_of(p, var, d));
  // Shortest first gives earlier gcd collapse.
  std::sort(out.begin(), out.end(), [](const MultiPoly& x, const MultiPoly& y) {
    return x.size() < y.size();
  });
  return out;
}

MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_in(const MultiPoly& p, std::size_t var) {
  MultiPoly g(p.symbols());
  for (const auto& c : coeffs_in(p, var)) {
    g = gcd_poly(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

MultiPoly prem(MultiPoly r, const MultiPoly& q, std::size_t var) {
  const int dq = q.max_degree(var);
  const MultiPoly lq = coeff_of(q, var, dq);
  while (!r.is_zero() && r.max_degree(var) >= dq) {
    const int dr = r.max_degree(var);
    MultiPoly lr = coeff_of(r, var, dr);
    Exponents e(r.symbols()->size(), 0);
    e[var] = dr - dq;
    r = lq * r - lr * MultiPoly::monomial(1, e, r.symbols()) * q;
    r = integer_primitive(r);
  }
  return r;
}

constexpr std::uint64_t kPrime = 2147483629;  // largest prime below 2^31

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kPrime;
  while (e > 0) {
    if (e & 1) r = r * b % kPrime;
    b = b * b % kPrime;
    e >>= 1;
  }
  return r;
}

// Image of an integer-primitive p in F_p[var], every other symbol set to a
// fixed residue. Returns nullopt if a coefficient has a denominator
// divisible by the prime.
std::optional<std::vector<std::uint64_t>> modular_image(const MultiPoly& p,
                                                        std::size_t var) {
  std::vector<std::uint64_t> out(p.max_degree(var) + 1, 0);
  for (const auto& t : p.terms()) {
    const std::uint64_t den = mpz_fdiv_ui(t.coef.get_den_mpz_t(), kPrime);
    if (den == 0) return std::nullopt;
    std::uint64_t c = mpz_fdiv_ui(t.coef.get_num_mpz_t(), kPrime);
    c = c * pow_mod(den, kPrime - 2) % kPrime;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (i == var || t.exps[i] == 0) continue;
      c = c * pow_mod(1000003 + 7919 * i, t.exps[i]) % kPrime;
    }
    auto& slot = out[t.exps[var]];
    slot = (slot + c) % kPrime;
  }
  return out;
}

// Degree of gcd of two polynomials over F_p with nonzero leading terms.
std::size_t modular_gcd_degree(std::vector<std::uint64_t> a,
                               std::vector<std::uint64_t> b) {
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const std::uint64_t inv = pow_mod(b.back(), kPrime - 2);
    while (a.size() >= b.size()) {
      const std::uint64_t f = a.back() * inv % kPrime;
      const std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[off + i] = (a[off + i] + kPrime - f * b[i] % kPrime) % kPrime;
      }
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// True when a modular sample proves gcd(a, b) is free of var. Only
// conclusive when neither leading coefficient vanishes at the sample.
bool coprime_in(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  auto ia = modular_image(integer_primitive(a), var);
  auto ib = modular_image(integer_primitive(b), var);
  if (!ia || !ib) return false;
  if (ia->back() == 0 || ib->back() == 0) return false;
  return modular_gcd_degree(std::move(*ia), std::move(*ib)) == 0;
}

MultiPoly gcd_poly_raw(const MultiPoly& a, const MultiPoly& b);

// gcd modulo powers of t of polynomials with non-negative exponents. The
// result has minimum t-degree 0.
MultiPoly gcd_poly(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly g = gcd_poly_raw(a, b);
  return g.is_zero() ? g : g.shifted_t(-g.min_degree(0));
}

MultiPoly gcd_poly_raw(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return integer_primitive(b);
  if (b.is_zero()) return integer_primitive(a);
  if (a.is_constant() || b.is_constant()) {
    return MultiPoly::constant(1, a.symbols());
  }
  if (a == b) return integer_primitive(a);
  const std::size_t n = a.symbols()->size();
  // Monomial factors are split off first.
  Exponents ma(n), mb(n), mg(n);
  bool has_mono = false;
  for (std::size_t v = 0; v < n; ++v) {
    ma[v] = a.min_degree(v);
    mb[v] = b.min_degree(v);
    mg[v] = std::min(ma[v], mb[v]);
    has_mono = has_mono || ma[v] != 0 || mb[v] != 0;
  }
  if (has_mono) {
    MultiPoly ra = divide_exact(a, MultiPoly::monomial(1, ma, a.symbols()));
    MultiPoly rb = divide_exact(b, MultiPoly::monomial(1, mb, b.symbols()));
    return MultiPoly::monomial(1, mg, a.symbols()) * gcd_poly_raw(ra, rb);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (a.depends_on(v) && !b.depends_on(v)) return gcd_poly(content_in(a, v), b);
    if (b.depends_on(v) && !a.depends_on(v)) return gcd_poly(a, content_in(b, v));
  }
  // Among the shared symbols that a modular sample cannot rule out, recurse
  // on the one of least degree.
  long v = -1;
  int best = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (!a.depends_on(u) || coprime_in(a, b, u)) continue;
    const int d = std::max(a.max_degree(u), b.max_degree(u));
    if (v < 0 || d < best) {
      v = static_cast<long>(u);
      best = d;
    }
  }
  if (v < 0) return MultiPoly::constant(1, a.symbols());
  if (a.size() >= b.size()) {
    if (try_divide(a, b)) return integer_primitive(b);
  } else if (try_divide(b, a)) {
    return integer_primitive(a);
  }
  MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly g = gcd_poly(ca, cb);
  MultiPoly p = divide_exact(a, ca), q = divide_exact(b, cb);
  if (p.max_degree(v) < q.max_degree(v)) std::swap(p, q);
  while (true) {
    MultiPoly r = prem(p, q, v);
    if (r.is_zero()) break;
    if (!r.depends_on(v)) {
      q = MultiPoly::constant(1, a.symbols());
      break;
    }
    p = std::move(q);
    q = divide_exact(r, content_in(r, v));
  }
  if (q.depends_on(v)) q = divide_exact(q, content_in(q, v));
  return integer_primitive(g * q);
}

}  // namespace

MultiPoly gcd(const MultiPoly& x, const MultiPoly& y) {
  MultiPoly a = x, b = y;
  unify(a, b);
  if (!a.is_zero()) a = a.shifted_t(-a.min_degree(0));
  if (!b.is_zero()) b = b.shifted_t(-b.min_degree(0));
  return gcd_poly(a, b);
}

}  // namespace ctkit::symcalc
