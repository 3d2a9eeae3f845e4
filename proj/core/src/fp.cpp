// Copyright 2026 The ultra authors
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

#include "ultra/fp.hpp"

#include <cctype>

namespace ultra {

namespace {

void check_same_p(unsigned long a, unsigned long b, const char* what) {
  if (a != b)
    throw std::invalid_argument(std::string(what) + ": operands over different prime fields");
}

unsigned long pow_mod(unsigned long a, unsigned long e, unsigned long p) {
  unsigned long r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = (r * a) % p;
    a = (a * a) % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

unsigned long inv_mod(unsigned long a, unsigned long p) {
  a %= p;
  if (a == 0) throw std::domain_error("inv_mod: zero is not invertible");
  return pow_mod(a, p - 2, p);
}

namespace {

void check_p(unsigned long p) {
  if (p < 2) throw std::invalid_argument("FpPoly: p must be a prime >= 2");
  // Residue products must fit in 64 bits.
  if (p >= (1UL << 31)) throw std::invalid_argument("FpPoly: p too large");
}

}  // namespace

FpPoly::FpPoly(unsigned long p) : p_(p) { check_p(p); }

FpPoly::FpPoly(unsigned long p, std::vector<unsigned long> coeffs) : p_(p), c_(std::move(coeffs)) {
  check_p(p);
  for (auto& c : c_) c %= p_;
  trim();
}

FpPoly FpPoly::constant(unsigned long p, unsigned long a) { return FpPoly(p, {a}); }

FpPoly FpPoly::var(unsigned long p) { return FpPoly(p, {0, 1}); }

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

long FpPoly::ord() const {
  if (c_.empty()) throw std::domain_error("FpPoly::ord: zero polynomial");
  size_t i = 0;
  while (c_[i] == 0) ++i;
  return static_cast<long>(i);
}

unsigned long FpPoly::leading() const {
  if (c_.empty()) throw std::domain_error("FpPoly::leading: zero polynomial");
  return c_.back();
}

bool FpPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  check_same_p(a.p_, b.p_, "FpPoly::operator+");
  std::vector<unsigned long> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
  return FpPoly(a.p_, std::move(r));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  check_same_p(a.p_, b.p_, "FpPoly::operator-");
  std::vector<unsigned long> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
  return FpPoly(a.p_, std::move(r));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  check_same_p(a.p_, b.p_, "FpPoly::operator*");
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
  std::vector<unsigned long> r(a.c_.size() + b.c_.size() - 1, 0);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      r[i + j] = (r[i + j] + a.c_[i] * b.c_[j]) % a.p_;
  }
  return FpPoly(a.p_, std::move(r));
}

FpPoly FpPoly::operator-() const {
  std::vector<unsigned long> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = (p_ - c_[i]) % p_;
  return FpPoly(p_, std::move(r));
}

bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

void FpPoly::divrem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
  check_same_p(a.p_, b.p_, "FpPoly::divrem");
  if (b.is_zero()) throw std::domain_error("FpPoly::divrem: division by zero");
  unsigned long p = a.p_;
  std::vector<unsigned long> rem = a.c_;
  std::vector<unsigned long> quo;
  long db = b.degree();
  unsigned long lb_inv = inv_mod(b.leading(), p);
  long dr = static_cast<long>(rem.size()) - 1;
  while (!rem.empty() && dr >= db) {
    quo.resize(std::max<size_t>(quo.size(), dr - db + 1), 0);
    unsigned long factor = (rem.back() * lb_inv) % p;
    quo[dr - db] = factor;
    for (long i = 0; i <= db; ++i) {
      unsigned long sub = (factor * b.c_[i]) % p;
      rem[dr - db + i] = (rem[dr - db + i] + p - sub) % p;
    }
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    dr = static_cast<long>(rem.size()) - 1;
  }
  q = FpPoly(p, std::move(quo));
  r = FpPoly(p, std::move(rem));
}

FpPoly FpPoly::shifted(long by) const {
  if (by < 0) throw std::invalid_argument("FpPoly::shifted: negative shift");
  if (is_zero()) return *this;
  std::vector<unsigned long> r(c_.size() + by, 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i + by] = c_[i];
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::gcd(const FpPoly& a, const FpPoly& b) {
  check_same_p(a.p_, b.p_, "FpPoly::gcd");
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly q(x.p_), r(x.p_);
    divrem(x, y, q, r);
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.made_monic();
}

FpPoly FpPoly::made_monic() const {
  if (is_zero()) throw std::domain_error("FpPoly::made_monic: zero polynomial");
  unsigned long s = inv_mod(leading(), p_);
  std::vector<unsigned long> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] * s) % p_;
  return FpPoly(p_, std::move(r));
}

FpPoly FpPoly::pow(const Int& e) const {
  if (sgn(e) < 0) throw std::invalid_argument("FpPoly::pow: negative exponent");
  FpPoly base = *this;
  FpPoly acc = FpPoly::constant(p_, 1);
  Int k = e;
  while (sgn(k) > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
    k >>= 1;
    if (sgn(k) > 0) base = base * base;
  }
  return acc;
}

FpPoly FpPoly::frobenius_pow(const Int& q) const {
  Int rest = q;
  unsigned long steps = mpz_remove(rest.get_mpz_t(), q.get_mpz_t(), Int(p_).get_mpz_t());
  if (rest != 1 || steps == 0)
    throw std::invalid_argument("FpPoly::frobenius_pow: q must be a positive power of p");
  if (is_zero()) return *this;
  if (!q.fits_ulong_p()) throw std::overflow_error("FpPoly::frobenius_pow: q too large");
  unsigned long qq = q.get_ui();
  std::vector<unsigned long> r((c_.size() - 1) * qq + 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) r[i * qq] = c_[i];
  return FpPoly(p_, std::move(r));
}

std::string FpPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    unsigned long c = c_[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

namespace {

// Recursive-descent helper for the additive polynomial grammar.
struct PolyParser {
  const std::string& s;
  size_t i = 0;
  unsigned long p;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("RatFun::parse: " + why + " at position " +
                                std::to_string(i) + " in '" + s + "'");
  }

  unsigned long number() {
    skip_ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected digit");
    unsigned long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000000) fail("numeral too large");
      ++i;
    }
    return v;
  }

  // coefficient numerals must be residues, the grammar has digits 0..p-1
  FpPoly term() {
    skip_ws();
    unsigned long coef = 1;
    bool saw_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = number();
      if (coef >= p) fail("coefficient not a residue mod p");
      saw_coef = true;
    }
    skip_ws();
    unsigned long exp = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      exp = 1;
      skip_ws();
      if (i < s.size() && s[i] == '^') {
        ++i;
        exp = number();
        if (exp > 4096) fail("exponent too large");
      }
    } else if (!saw_coef) {
      fail("expected term");
    }
    std::vector<unsigned long> c(exp + 1, 0);
    c[exp] = coef;
    return FpPoly(p, std::move(c));
  }

  FpPoly poly() {
    FpPoly acc = term();
    skip_ws();
    while (i < s.size() && s[i] == '+') {
      ++i;
      acc = acc + term();
      skip_ws();
    }
    return acc;
  }

  FpPoly part() {
    skip_ws();
    if (i < s.size() && s[i] == '(') {
      ++i;
      FpPoly r = poly();
      skip_ws();
      if (i >= s.size() || s[i] != ')') fail("expected ')'");
      ++i;
      return r;
    }
    return poly();
  }
};

}  // namespace

FpPoly FpPoly::parse(unsigned long p, const std::string& text) {
  PolyParser pp{text, 0, p};
  FpPoly r = pp.part();
  pp.skip_ws();
  if (pp.i != text.size()) pp.fail("trailing input");
  return r;
}

RatFun::RatFun(unsigned long p) : num_(p), den_(FpPoly::constant(p, 1)) {}

RatFun::RatFun(FpPoly num, FpPoly den) : num_(std::move(num)), den_(std::move(den)) {
  check_same_p(num_.p(), den_.p(), "RatFun");
  if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
  normalize();
}

RatFun RatFun::constant(unsigned long p, unsigned long a) {
  return RatFun(FpPoly::constant(p, a), FpPoly::constant(p, 1));
}

RatFun RatFun::t(unsigned long p) {
  return RatFun(FpPoly::var(p), FpPoly::constant(p, 1));
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = FpPoly::constant(p(), 1);
    return;
  }
  FpPoly g = FpPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    FpPoly q(p()), r(p());
    FpPoly::divrem(num_, g, q, r);
    num_ = q;
    FpPoly::divrem(den_, g, q, r);
    den_ = q;
  }
  unsigned long s = inv_mod(den_.leading(), p());
  if (s != 1) {
    FpPoly scale = FpPoly::constant(p(), s);
    num_ = num_ * scale;
    den_ = den_ * scale;
  }
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw std::domain_error("RatFun: division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const RatFun& a, const RatFun& b) {
  return a.num_ == b.num_ && a.den_ == b.den_;
}

RatFun RatFun::pow(const Int& e) const {
  if (sgn(e) < 0) throw std::invalid_argument("RatFun::pow: negative exponent");
  if (is_zero() && sgn(e) == 0) return constant(p(), 1);
  return RatFun(num_.pow(e), den_.pow(e));
}

RatFun RatFun::frobenius_pow(const Int& q) const {
  return RatFun(num_.frobenius_pow(q), den_.frobenius_pow(q));
}

std::string RatFun::str() const {
  if (den_.degree() == 0) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFun RatFun::parse(unsigned long p, const std::string& text) {
  // Split at the single top-level '/', if any; each side is a polynomial.
  int depth = 0;
  size_t slash = std::string::npos;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == '/' && depth == 0) {
      if (slash != std::string::npos)
        throw std::invalid_argument("RatFun::parse: more than one '/' in '" + text + "'");
      slash = i;
    }
  }
  if (slash == std::string::npos) {
    FpPoly num = FpPoly::parse(p, text);
    return RatFun(num, FpPoly::constant(p, 1));
  }
  FpPoly num = FpPoly::parse(p, text.substr(0, slash));
  FpPoly den = FpPoly::parse(p, text.substr(slash + 1));
  return RatFun(num, den);
}

Valuation vt(const RatFun& x) {
  if (x.is_zero()) return Valuation::infinity();
  return Valuation(Rat(x.num().ord() - x.den().ord()));
}

}  // namespace ultra
